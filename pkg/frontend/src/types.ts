/** Response shapes of the bundle query service (see the service docs). */

export interface MetaResponse {
  N: number;
  m: number;
  kappa: number;
  mu: number;
  faces: number;
  bbox: [string, string, string, string];
}

export interface GeometryVertex {
  id: number;
  x: string; // exact decimal or p/q
  y: string;
}

export interface GeometryEdge {
  a: number;
  b: number;
  swaps: number; // number of simplex pairs swapping across this edge
}

export interface GeometryFace {
  id: number;
  root: number; // merged-face id this fine polygon belongs to
  tri: number;
  loop: number[]; // counterclockwise vertex ids
}

export interface GeometryResponse {
  base: { vertices: [string, string][]; triangles: number[][] };
  vertices: GeometryVertex[];
  edges: GeometryEdge[];
  faces: GeometryFace[];
}

/** One diagram point: [birth, death] rendered exactly by the service;
 * death may be the string "inf". */
export type DiagramPoint = [string, string];

export interface DiagramResponse {
  face_id: number;
  points: DiagramPoint[];
}

/** Parse the service's exact number rendering into a plotting float. */
export function toNumber(value: string): number {
  if (value === "inf") {
    return Infinity;
  }
  const slash = value.indexOf("/");
  if (slash >= 0) {
    return Number(value.slice(0, slash)) / Number(value.slice(slash + 1));
  }
  return Number(value);
}
