import { layoutDiagram } from "./diagram.js";
import { vertexCoordinates } from "./geometry.js";
import { ViewTransform } from "./transform.js";
import { DiagramPoint, GeometryResponse } from "./types.js";

/** Canvas drawing. Everything here is a straight projection of service
 * data: the numeric work happened server-side. */

export function drawBase(
  ctx: CanvasRenderingContext2D,
  geometry: GeometryResponse,
  view: ViewTransform,
  marker: { x: number; y: number } | null,
): void {
  ctx.clearRect(0, 0, view.width, view.height);
  const coords = vertexCoordinates(geometry);
  const baseCoords = geometry.base.vertices.map(
    ([x, y]) => [Number(neat(x)), Number(neat(y))] as [number, number],
  );
  ctx.fillStyle = "#f4f6fb";
  for (const tri of geometry.base.triangles) {
    ctx.beginPath();
    tri.forEach((v, i) => {
      const [px, py] = view.toCanvas(baseCoords[v][0], baseCoords[v][1]);
      i === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
    });
    ctx.closePath();
    ctx.fill();
  }
  // arrangement edges, heavier and darker the more pairs swap across them
  for (const edge of geometry.edges) {
    const [ax, ay] = coords[edge.a];
    const [bx, by] = coords[edge.b];
    const [px0, py0] = view.toCanvas(ax, ay);
    const [px1, py1] = view.toCanvas(bx, by);
    if (edge.swaps === 0) {
      ctx.strokeStyle = "#9aa7bd";
      ctx.lineWidth = 1;
    } else {
      ctx.strokeStyle = edge.swaps === 1 ? "#4664c8" : "#c03a5a";
      ctx.lineWidth = Math.min(1 + edge.swaps, 4);
    }
    ctx.beginPath();
    ctx.moveTo(px0, py0);
    ctx.lineTo(px1, py1);
    ctx.stroke();
  }
  if (marker) {
    const [mx, my] = view.toCanvas(marker.x, marker.y);
    ctx.strokeStyle = "#101418";
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    ctx.arc(mx, my, 5, 0, 2 * Math.PI);
    ctx.stroke();
    ctx.beginPath();
    ctx.moveTo(mx - 8, my);
    ctx.lineTo(mx + 8, my);
    ctx.moveTo(mx, my - 8);
    ctx.lineTo(mx, my + 8);
    ctx.stroke();
  }
}

function neat(value: string): string {
  const slash = value.indexOf("/");
  if (slash < 0) {
    return value;
  }
  return String(
    Number(value.slice(0, slash)) / Number(value.slice(slash + 1)),
  );
}

export function drawDiagramPanel(
  ctx: CanvasRenderingContext2D,
  points: DiagramPoint[],
  size: number,
): void {
  ctx.clearRect(0, 0, size, size);
  const layout = layoutDiagram(points, size);
  // frame and the immortal band
  ctx.strokeStyle = "#c5ccd9";
  ctx.lineWidth = 1;
  ctx.strokeRect(34, layout.plotTop, size - 68, size - 34 - layout.plotTop);
  ctx.fillStyle = "#eef1f7";
  ctx.fillRect(34, layout.infBandY - 9, size - 68, 18);
  ctx.fillStyle = "#5a6472";
  ctx.font = "11px sans-serif";
  ctx.fillText("death = inf", 38, layout.infBandY - 12);
  // diagonal
  ctx.strokeStyle = "#c5ccd9";
  ctx.beginPath();
  ctx.moveTo(layout.diagonal.x0, layout.diagonal.y0);
  ctx.lineTo(layout.diagonal.x1, layout.diagonal.y1);
  ctx.stroke();
  // points
  for (const dot of layout.dots) {
    ctx.fillStyle = dot.infinite ? "#c03a5a" : "#4664c8";
    ctx.beginPath();
    ctx.arc(dot.x, dot.y, 4, 0, 2 * Math.PI);
    ctx.fill();
  }
  ctx.fillStyle = "#5a6472";
  ctx.fillText(layout.range.lo.toPrecision(3), 34, size - 20);
  ctx.fillText(layout.range.hi.toPrecision(3), size - 60, size - 20);
}
