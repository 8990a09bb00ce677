import type { ApiClient } from "./api.js";
import type { BarcodeDoc, CycleRecord, IntervalRecord, Meta } from "./types.js";
import { colorForRank } from "./colors.js";

export interface StoreEvents {
  change: () => void;
  error: (message: string) => void;
}

function persistenceOf(iv: IntervalRecord): number {
  if (iv.death_value === null) return Infinity;
  return iv.death_value - iv.birth_value;
}

/** Bars sorted most persistent first; ties go to the earlier birth. */
export function rankOrder(doc: BarcodeDoc): number[] {
  return doc.intervals
    .map((iv) => iv.id)
    .sort((a, b) => {
      const ia = doc.intervals[a];
      const ib = doc.intervals[b];
      const pa = persistenceOf(ia);
      const pb = persistenceOf(ib);
      if (pa !== pb) return pb - pa;
      if (ia.birth_value !== ib.birth_value) return ia.birth_value - ib.birth_value;
      return ia.birth - ib.birth;
    });
}

/**
 * All view state lives here: the dataset description, which bars are
 * selected, and the cycles fetched for them.  Every cycle comes from the
 * server verbatim; the store never derives topological data.
 */
export class Store {
  meta: Meta | null = null;
  barcode: BarcodeDoc = { intervals: [] };
  readonly selected = new Set<number>();
  readonly cycles = new Map<number, CycleRecord>();
  private order: number[] = [];
  private rankOf = new Map<number, number>();
  private listeners: { [K in keyof StoreEvents]: StoreEvents[K][] } = {
    change: [],
    error: [],
  };

  constructor(private api: ApiClient) {}

  on<K extends keyof StoreEvents>(event: K, cb: StoreEvents[K]): void {
    this.listeners[event].push(cb);
  }

  private emitChange(): void {
    for (const cb of this.listeners.change) cb();
  }

  private emitError(message: string): void {
    for (const cb of this.listeners.error) cb(message);
  }

  async load(): Promise<void> {
    this.meta = await this.api.meta();
    this.barcode = await this.api.barcode();
    this.order = rankOrder(this.barcode);
    this.rankOf = new Map(this.order.map((id, rank) => [id, rank]));
    this.emitChange();
  }

  /** Bar ids, most persistent first. */
  barOrder(): number[] {
    return this.order.slice();
  }

  colorOf(barId: number): string {
    return colorForRank(this.rankOf.get(barId) ?? 0);
  }

  isSelected(barId: number): boolean {
    return this.selected.has(barId);
  }

  /** Selected cycles with their colors, in rank order, for the overlay. */
  overlays(): { record: CycleRecord; color: string }[] {
    const out: { record: CycleRecord; color: string }[] = [];
    for (const id of this.order) {
      if (this.selected.has(id)) {
        const record = this.cycles.get(id);
        if (record) out.push({ record, color: this.colorOf(id) });
      }
    }
    return out;
  }

  /**
   * Click behaviour: select fetches the bar's cycle (once; repeat clicks
   * during the fetch are deduplicated downstream), a second click
   * deselects.  Fetch failures clear the selection and surface a toast.
   */
  async toggleBar(barId: number): Promise<void> {
    if (barId < 0 || barId >= this.barcode.intervals.length) return;
    if (this.selected.has(barId)) {
      this.selected.delete(barId);
      this.emitChange();
      return;
    }
    this.selected.add(barId);
    this.emitChange();
    if (!this.cycles.has(barId)) {
      try {
        const record = await this.api.cycle(barId);
        this.cycles.set(barId, record);
      } catch (err) {
        this.selected.delete(barId);
        this.emitError(`cycle ${barId}: ${err instanceof Error ? err.message : err}`);
      }
    }
    this.emitChange();
  }

  /** Invariants the UI maintains; asserted by tests after every action. */
  checkInvariants(): void {
    const ids = new Set(this.barcode.intervals.map((iv) => iv.id));
    for (const id of this.selected) {
      if (!ids.has(id)) throw new Error(`selected bar ${id} not in barcode`);
    }
    for (const [id, record] of this.cycles) {
      if (!ids.has(id)) throw new Error(`cycle for unknown bar ${id}`);
      if (record.interval_id !== id) {
        throw new Error(`cycle ${record.interval_id} stored under bar ${id}`);
      }
    }
  }
}
