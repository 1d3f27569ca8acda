import { DiagramPoint, toNumber } from "./types.js";

/** Layout of the persistence-diagram panel.
 *
 * Finite points scatter over a square plot with the diagonal drawn;
 * immortal classes (death = inf) sit on a dedicated band above the plot.
 * Labels carry the service's strings verbatim: the panel never reformats
 * a number, so what is displayed is byte-for-byte what the service sent.
 */

export interface DiagramDot {
  x: number; // canvas coordinates within the panel
  y: number;
  infinite: boolean;
  label: string; // "<birth> <death>" exactly as served
}

export interface DiagramLayout {
  dots: DiagramDot[];
  diagonal: { x0: number; y0: number; x1: number; y1: number };
  infBandY: number; // the y of the immortal band (above the plot area)
  plotTop: number; // top of the finite plotting area
  range: { lo: number; hi: number };
  lines: string[]; // textual listing, one "<birth> <death>" per point
}

export const INF_BAND = 26;
const PAD = 34;

export function diagramLines(points: DiagramPoint[]): string[] {
  return points.map(([birth, death]) => `${birth} ${death}`);
}

export function layoutDiagram(
  points: DiagramPoint[],
  size: number,
): DiagramLayout {
  const finite: number[] = [];
  for (const [birth, death] of points) {
    finite.push(toNumber(birth));
    if (death !== "inf") {
      finite.push(toNumber(death));
    }
  }
  let lo = finite.length ? Math.min(...finite) : 0;
  let hi = finite.length ? Math.max(...finite) : 1;
  if (lo === hi) {
    lo -= 1;
    hi += 1;
  }
  const pad = (hi - lo) * 0.08;
  lo -= pad;
  hi += pad;
  const plotTop = PAD + INF_BAND;
  const plotSize = size - PAD - plotTop;
  const sx = (v: number) => PAD + ((v - lo) / (hi - lo)) * plotSize;
  const sy = (v: number) => plotTop + plotSize - ((v - lo) / (hi - lo)) * plotSize;
  const infBandY = PAD + INF_BAND / 2;
  const dots: DiagramDot[] = points.map(([birth, death]) => {
    const bx = sx(toNumber(birth));
    if (death === "inf") {
      return { x: bx, y: infBandY, infinite: true, label: `${birth} ${death}` };
    }
    return {
      x: bx,
      y: sy(toNumber(death)),
      infinite: false,
      label: `${birth} ${death}`,
    };
  });
  return {
    dots,
    diagonal: { x0: sx(lo), y0: sy(lo), x1: sx(hi), y1: sy(hi) },
    infBandY,
    plotTop,
    range: { lo, hi },
    lines: diagramLines(points),
  };
}
