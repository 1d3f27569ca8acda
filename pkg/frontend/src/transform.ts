/** Affine map between base-surface coordinates and canvas pixels.
 * Canvas y grows downward; base y grows upward, so the map flips y. */

export interface Bounds {
  x0: number;
  y0: number;
  x1: number;
  y1: number;
}

export class ViewTransform {
  readonly scale: number;
  readonly offsetX: number;
  readonly offsetY: number;

  constructor(
    readonly bounds: Bounds,
    readonly width: number,
    readonly height: number,
    readonly margin = 20,
  ) {
    const spanX = bounds.x1 - bounds.x0 || 1;
    const spanY = bounds.y1 - bounds.y0 || 1;
    this.scale = Math.min(
      (width - 2 * margin) / spanX,
      (height - 2 * margin) / spanY,
    );
    // center the drawing
    this.offsetX = (width - this.scale * spanX) / 2;
    this.offsetY = (height - this.scale * spanY) / 2;
  }

  toCanvas(x: number, y: number): [number, number] {
    return [
      this.offsetX + (x - this.bounds.x0) * this.scale,
      this.height - this.offsetY - (y - this.bounds.y0) * this.scale,
    ];
  }

  toBase(px: number, py: number): [number, number] {
    return [
      this.bounds.x0 + (px - this.offsetX) / this.scale,
      this.bounds.y0 + (this.height - this.offsetY - py) / this.scale,
    ];
  }
}

/** Render a clicked base coordinate as a short exact decimal for the
 * diagram query (six decimal places is far below pixel resolution). */
export function formatCoordinate(value: number): string {
  if (!Number.isFinite(value)) {
    throw new Error(`bad coordinate ${value}`);
  }
  return value.toFixed(6).replace(/0+$/, "").replace(/\.$/, "");
}
