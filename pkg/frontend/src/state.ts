import { OutsideBaseError, QueryApi } from "./api.js";
import { DiagramResponse, GeometryResponse } from "./types.js";

export interface ClickRecord {
  x: string; // exact coordinate strings as sent to the service
  y: string;
  faceId: number;
  q: number;
}

/** What the explorer currently shows: the loaded geometry, the selected
 * homological dimension, the click history, and the diagram of the last
 * successful query. At most one diagram request is in flight; a newer
 * click aborts an older pending one. */
export class ExplorerState {
  geometry: GeometryResponse | null = null;
  dimension = 0;
  history: ClickRecord[] = [];
  current: DiagramResponse | null = null;
  currentPoint: { x: string; y: string } | null = null;
  message: string | null = null;

  private pending: AbortController | null = null;

  constructor(private readonly api: QueryApi) {}

  async loadGeometry(): Promise<GeometryResponse> {
    this.geometry = await this.api.geometry();
    return this.geometry;
  }

  /** Query the diagram at a base point. Returns the response, or null when
   * the click was superseded, outside the base, or failed. */
  async clickAt(x: string, y: string): Promise<DiagramResponse | null> {
    if (this.pending) {
      this.pending.abort();
    }
    const controller = new AbortController();
    this.pending = controller;
    try {
      const diagram = await this.api.diagram(
        x,
        y,
        this.dimension,
        controller.signal,
      );
      if (this.pending !== controller) {
        return null; // a newer click took over while we awaited
      }
      this.current = diagram;
      this.currentPoint = { x, y };
      this.message = null;
      this.history.push({ x, y, faceId: diagram.face_id, q: this.dimension });
      return diagram;
    } catch (err) {
      if (controller.signal.aborted) {
        return null; // cancelled by a newer click: not an error, no history
      }
      if (err instanceof OutsideBaseError) {
        this.message = "outside base space";
        return null;
      }
      this.message = `query failed: ${String(err)}`;
      return null;
    } finally {
      if (this.pending === controller) {
        this.pending = null;
      }
    }
  }

  /** Change q and replay the last successful point, if any. */
  async setDimension(q: number): Promise<DiagramResponse | null> {
    this.dimension = q;
    if (this.currentPoint) {
      return this.clickAt(this.currentPoint.x, this.currentPoint.y);
    }
    return null;
  }
}
