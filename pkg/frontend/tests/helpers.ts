import type { BarcodeDoc, CycleRecord, Meta } from "../src/types.js";

export const TRIANGLE_META: Meta = {
  kind: "filtration",
  name: "triangle.flt",
  cells: { vertices: 3, edges: 3, two_cells: 1, total: 7 },
  intervals: 1,
  persistence_mode: "index",
};

export const TRIANGLE_BARCODE: BarcodeDoc = {
  intervals: [
    { id: 0, birth: 6, death: 7, birth_value: 6, death_value: 7 },
  ],
};

export const TRIANGLE_CYCLE: CycleRecord = {
  interval_id: 0,
  G: [6],
  edges: [[1, 2], [2, 3], [1, 3]],
  cell_ids: [4, 5, 6],
  weight: 3.0,
  components: 1,
};

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

export function mixedBarcode(): BarcodeDoc {
  return {
    intervals: [
      { id: 0, birth: 4, death: 9, birth_value: 1.0, death_value: 1.5 },
      { id: 1, birth: 6, death: null, birth_value: 1.2, death_value: null },
      { id: 2, birth: 8, death: 12, birth_value: 1.3, death_value: 4.3 },
    ],
  };
}
