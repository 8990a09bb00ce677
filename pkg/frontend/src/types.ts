/** Wire types of the backend API; the client never computes topology itself. */

export interface IntervalRecord {
  id: number;
  birth: number;
  death: number | null;
  birth_value: number;
  death_value: number | null;
}

export interface BarcodeDoc {
  intervals: IntervalRecord[];
}

export interface CycleRecord {
  interval_id: number;
  G: number[];
  /** vertex-id pairs, 1-based cell ids of the endpoints */
  edges: [number, number][];
  cell_ids: number[];
  weight: number;
  components: number;
}

export interface Meta {
  kind: "points" | "image" | "filtration";
  name: string;
  cells: { vertices: number; edges: number; two_cells: number; total: number };
  intervals: number;
  persistence_mode: "value" | "index";
  bbox?: { min: number[]; max: number[] };
  width?: number;
  height?: number;
}

export interface PointsGeometry {
  kind: "points";
  points: [number, number, number][];
}

export interface ImageGeometry {
  kind: "image";
  width: number;
  height: number;
  pgm_base64: string;
  /** vertex cell id -> [row, col] */
  vertex_pixels: Record<string, [number, number]>;
}

export interface FiltrationGeometry {
  kind: "filtration";
  vertices: number;
}

export type Geometry = PointsGeometry | ImageGeometry | FiltrationGeometry;
