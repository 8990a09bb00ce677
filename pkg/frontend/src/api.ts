import type { BarcodeDoc, CycleRecord, Geometry, Meta } from "./types.js";

export interface TraceEntry {
  url: string;
  status: number;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

type FetchLike = (url: string) => Promise<Response>;

/**
 * Thin fetch wrapper with two jobs: record every request in a trace (so
 * tests can prove where data came from) and deduplicate in-flight
 * requests per URL, so clicking a bar twice during a slow fetch issues
 * one request.
 */
export class ApiClient {
  readonly trace: TraceEntry[] = [];
  private inflight = new Map<string, Promise<unknown>>();

  constructor(
    private base: string = "",
    private fetchImpl: FetchLike = (url) => fetch(url),
  ) {}

  private getJson<T>(path: string): Promise<T> {
    const url = this.base + path;
    const pending = this.inflight.get(url);
    if (pending) {
      return pending as Promise<T>;
    }
    const p = (async () => {
      try {
        const resp = await this.fetchImpl(url);
        this.trace.push({ url, status: resp.status });
        if (!resp.ok) {
          throw new ApiError(resp.status, `${url} -> ${resp.status}`);
        }
        return (await resp.json()) as T;
      } finally {
        this.inflight.delete(url);
      }
    })();
    this.inflight.set(url, p);
    return p;
  }

  meta(): Promise<Meta> {
    return this.getJson<Meta>("/api/meta");
  }

  barcode(): Promise<BarcodeDoc> {
    return this.getJson<BarcodeDoc>("/api/barcode");
  }

  geometry(): Promise<Geometry> {
    return this.getJson<Geometry>("/api/geometry");
  }

  cycle(id: number): Promise<CycleRecord> {
    return this.getJson<CycleRecord>(`/api/cycle/${id}`);
  }
}
