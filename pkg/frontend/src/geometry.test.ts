import { describe, expect, it } from "vitest";

import { baseBounds, faceAt, pointInLoop, vertexCoordinates } from "./geometry.js";
import { GeometryResponse } from "./types.js";

/** FF1's /geometry response, captured from the live service: the unit
 * square split into two triangles, with the swap chord across the lower
 * triangle. */
const FF1_GEOMETRY: GeometryResponse = {
  base: {
    vertices: [
      ["0", "0"],
      ["1", "0"],
      ["0", "1"],
      ["1", "1"],
    ],
    triangles: [
      [0, 1, 2],
      [1, 3, 2],
    ],
  },
  vertices: [
    { id: 0, x: "0", y: "0" },
    { id: 1, x: "1", y: "0" },
    { id: 2, x: "0", y: "1" },
    { id: 3, x: "1", y: "1" },
    { id: 4, x: "0.5", y: "0" },
    { id: 5, x: "0", y: "0.5" },
  ],
  edges: [
    { a: 0, b: 4, swaps: 0 },
    { a: 1, b: 4, swaps: 0 },
    { a: 0, b: 5, swaps: 0 },
    { a: 2, b: 5, swaps: 0 },
    { a: 1, b: 3, swaps: 0 },
    { a: 2, b: 3, swaps: 0 },
    { a: 4, b: 5, swaps: 1 },
  ],
  faces: [
    { id: 0, root: 0, tri: 0, loop: [4, 5, 0] },
    { id: 1, root: 1, tri: 1, loop: [1, 3, 2] },
    { id: 2, root: 1, tri: 0, loop: [5, 4, 1, 2] },
  ],
};

describe("pointInLoop", () => {
  const square: [number, number][] = [
    [0, 0],
    [1, 0],
    [1, 1],
    [0, 1],
  ];

  it("accepts interior points and rejects exterior ones", () => {
    expect(pointInLoop(square, 0.5, 0.5)).toBe(true);
    expect(pointInLoop(square, 1.5, 0.5)).toBe(false);
    expect(pointInLoop(square, -0.1, 0.5)).toBe(false);
  });
});

describe("faceAt", () => {
  const coords = vertexCoordinates(FF1_GEOMETRY);

  it("finds the polygon under a point and reports its merged id", () => {
    const near_origin = faceAt(FF1_GEOMETRY, coords, 0.1, 0.1);
    expect(near_origin?.root).toBe(0);
    const beyond_chord = faceAt(FF1_GEOMETRY, coords, 0.4, 0.4);
    expect(beyond_chord?.root).toBe(1);
    const upper = faceAt(FF1_GEOMETRY, coords, 0.75, 0.75);
    expect(upper?.root).toBe(1);
    expect(upper?.tri).toBe(1);
  });

  it("returns null outside the base", () => {
    expect(faceAt(FF1_GEOMETRY, coords, 5, 5)).toBeNull();
  });
});

describe("baseBounds", () => {
  it("spans the base vertices", () => {
    expect(baseBounds(FF1_GEOMETRY)).toEqual({ x0: 0, y0: 0, x1: 1, y1: 1 });
  });
});
