import { QueryApi } from "./api.js";
import { diagramLines } from "./diagram.js";
import { baseBounds, faceAt, vertexCoordinates } from "./geometry.js";
import { drawBase, drawDiagramPanel } from "./render.js";
import { ExplorerState } from "./state.js";
import { formatCoordinate, ViewTransform } from "./transform.js";

const baseCanvas = document.getElementById("base") as HTMLCanvasElement;
const diagramCanvas = document.getElementById("diagram") as HTMLCanvasElement;
const statusEl = document.getElementById("status") as HTMLElement;
const tooltipEl = document.getElementById("tooltip") as HTMLElement;
const pointsEl = document.getElementById("points") as HTMLElement;
const historyEl = document.getElementById("history") as HTMLElement;
const dimSelect = document.getElementById("dim") as HTMLSelectElement;
const serviceInput = document.getElementById("service") as HTMLInputElement;
const connectBtn = document.getElementById("connect") as HTMLButtonElement;

let state: ExplorerState | null = null;
let view: ViewTransform | null = null;
let marker: { x: number; y: number } | null = null;
let coords: [number, number][] = [];

function redrawBase(): void {
  if (state?.geometry && view) {
    drawBase(baseCanvas.getContext("2d")!, state.geometry, view, marker);
  }
}

function showDiagram(): void {
  const ctx = diagramCanvas.getContext("2d")!;
  if (state?.current) {
    drawDiagramPanel(ctx, state.current.points, diagramCanvas.width);
    // the listing repeats the service strings verbatim
    pointsEl.textContent = diagramLines(state.current.points).join("\n");
  } else {
    ctx.clearRect(0, 0, diagramCanvas.width, diagramCanvas.height);
    pointsEl.textContent = "";
  }
}

function showStatus(): void {
  if (!state) {
    return;
  }
  if (state.message) {
    statusEl.textContent = state.message;
    statusEl.className = "error";
  } else if (state.current && state.currentPoint) {
    statusEl.textContent =
      `PD_${state.dimension} at (${state.currentPoint.x}, ` +
      `${state.currentPoint.y}) — face ${state.current.face_id}, ` +
      `${state.current.points.length} points`;
    statusEl.className = "";
  } else {
    statusEl.textContent = "click a point";
    statusEl.className = "";
  }
  historyEl.textContent = state.history
    .slice(-8)
    .map((h) => `(${h.x}, ${h.y}) q=${h.q} → face ${h.faceId}`)
    .join("\n");
}

async function connect(): Promise<void> {
  const api = new QueryApi(serviceInput.value.replace(/\/$/, ""));
  state = new ExplorerState(api);
  statusEl.textContent = "loading geometry…";
  try {
    const geometry = await state.loadGeometry();
    view = new ViewTransform(
      baseBounds(geometry),
      baseCanvas.width,
      baseCanvas.height,
    );
    coords = vertexCoordinates(geometry);
    marker = null;
    redrawBase();
    showDiagram();
    statusEl.textContent = "geometry loaded — click a point";
    statusEl.className = "";
  } catch (err) {
    statusEl.textContent = `failed to load geometry: ${String(err)}`;
    statusEl.className = "error";
  }
}

baseCanvas.addEventListener("click", async (event) => {
  if (!state?.geometry || !view) {
    return;
  }
  const rect = baseCanvas.getBoundingClientRect();
  const [bx, by] = view.toBase(
    event.clientX - rect.left,
    event.clientY - rect.top,
  );
  marker = { x: bx, y: by };
  redrawBase();
  await state.clickAt(formatCoordinate(bx), formatCoordinate(by));
  showDiagram();
  showStatus();
});

baseCanvas.addEventListener("mousemove", (event) => {
  if (!state?.geometry || !view) {
    return;
  }
  const rect = baseCanvas.getBoundingClientRect();
  const [bx, by] = view.toBase(
    event.clientX - rect.left,
    event.clientY - rect.top,
  );
  const face = faceAt(state.geometry, coords, bx, by);
  if (face) {
    tooltipEl.textContent = `face ${face.root} (triangle ${face.tri})`;
    tooltipEl.style.left = `${event.clientX + 12}px`;
    tooltipEl.style.top = `${event.clientY + 12}px`;
    tooltipEl.style.display = "block";
  } else {
    tooltipEl.style.display = "none";
  }
});

baseCanvas.addEventListener("mouseleave", () => {
  tooltipEl.style.display = "none";
});

dimSelect.addEventListener("change", async () => {
  if (!state) {
    return;
  }
  await state.setDimension(Number(dimSelect.value));
  showDiagram();
  showStatus();
});

connectBtn.addEventListener("click", connect);
connect();
