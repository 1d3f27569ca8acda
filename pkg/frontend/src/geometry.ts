import { GeometryFace, GeometryResponse, toNumber } from "./types.js";

/** Plane coordinates of every arrangement vertex, indexed by id. */
export function vertexCoordinates(geometry: GeometryResponse): [number, number][] {
  const out: [number, number][] = [];
  for (const v of geometry.vertices) {
    out[v.id] = [toNumber(v.x), toNumber(v.y)];
  }
  return out;
}

/** Even-odd point-in-polygon test on a vertex loop. */
export function pointInLoop(
  loop: [number, number][],
  x: number,
  y: number,
): boolean {
  let inside = false;
  for (let i = 0, j = loop.length - 1; i < loop.length; j = i++) {
    const [xi, yi] = loop[i];
    const [xj, yj] = loop[j];
    if (yi > y !== yj > y && x < ((xj - xi) * (y - yi)) / (yj - yi) + xi) {
      inside = !inside;
    }
  }
  return inside;
}

/** The merged face id under a point, or null when outside every polygon.
 * Fine polygons are convex and tagged with their merged face id. */
export function faceAt(
  geometry: GeometryResponse,
  coords: [number, number][],
  x: number,
  y: number,
): GeometryFace | null {
  for (const face of geometry.faces) {
    const loop = face.loop.map((vid) => coords[vid]);
    if (pointInLoop(loop, x, y)) {
      return face;
    }
  }
  return null;
}

/** Bounding box of the base surface from its vertex coordinates. */
export function baseBounds(geometry: GeometryResponse) {
  const xs = geometry.base.vertices.map(([x]) => toNumber(x));
  const ys = geometry.base.vertices.map(([, y]) => toNumber(y));
  return {
    x0: Math.min(...xs),
    y0: Math.min(...ys),
    x1: Math.max(...xs),
    y1: Math.max(...ys),
  };
}
