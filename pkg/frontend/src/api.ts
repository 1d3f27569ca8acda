import { DiagramResponse, GeometryResponse, MetaResponse } from "./types.js";

export class OutsideBaseError extends Error {
  constructor() {
    super("point outside the base surface");
  }
}

/** Thin client for the three documented endpoints. */
export class QueryApi {
  constructor(
    readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async get(path: string, signal?: AbortSignal): Promise<unknown> {
    const resp = await this.fetchFn(this.baseUrl + path, { signal });
    if (resp.status === 404 && path.startsWith("/diagram")) {
      throw new OutsideBaseError();
    }
    if (!resp.ok) {
      throw new Error(`${path}: HTTP ${resp.status}`);
    }
    return resp.json();
  }

  meta(): Promise<MetaResponse> {
    return this.get("/meta") as Promise<MetaResponse>;
  }

  geometry(): Promise<GeometryResponse> {
    return this.get("/geometry") as Promise<GeometryResponse>;
  }

  diagram(
    x: string,
    y: string,
    q: number,
    signal?: AbortSignal,
  ): Promise<DiagramResponse> {
    const query = `/diagram?x=${encodeURIComponent(x)}&y=${encodeURIComponent(
      y,
    )}&q=${q}`;
    return this.get(query, signal) as Promise<DiagramResponse>;
  }
}
