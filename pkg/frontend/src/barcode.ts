import type { BarcodeDoc, IntervalRecord } from "./types.js";

export interface BarLayout {
  id: number;
  x0: number;
  x1: number;
  y: number;
  infinite: boolean;
  color: string;
  selected: boolean;
  label: string;
}

export const BAR_HEIGHT = 14;
const PAD_X = 10;

function label(iv: IntervalRecord): string {
  const death = iv.death === null ? "inf" : String(iv.death);
  return `[${iv.birth},${death})`;
}

/**
 * Pure layout: map intervals to pixel bars, most persistent on top.
 * Infinite bars run to the panel's right edge.
 */
export function layoutBars(
  doc: BarcodeDoc,
  order: number[],
  colorOf: (id: number) => string,
  isSelected: (id: number) => boolean,
  width: number,
): BarLayout[] {
  if (doc.intervals.length === 0) return [];
  const births = doc.intervals.map((iv) => iv.birth_value);
  const deaths = doc.intervals
    .filter((iv) => iv.death_value !== null)
    .map((iv) => iv.death_value as number);
  const lo = Math.min(...births);
  const hi = Math.max(...deaths, ...births);
  const span = hi - lo || 1;
  const usable = width - 2 * PAD_X;
  const xOf = (v: number) => PAD_X + ((v - lo) / span) * usable * 0.92;
  return order.map((id, row) => {
    const iv = doc.intervals[id];
    const infinite = iv.death_value === null;
    return {
      id,
      x0: xOf(iv.birth_value),
      x1: infinite ? width - PAD_X : xOf(iv.death_value as number),
      y: row * (BAR_HEIGHT + 4) + BAR_HEIGHT,
      infinite,
      color: colorOf(id),
      selected: isSelected(id),
      label: label(iv),
    };
  });
}

/** Rewrite the SVG panel from a layout; each bar is clickable. */
export function renderBarcode(
  svg: SVGSVGElement,
  layout: BarLayout[],
  onClick: (id: number) => void,
): void {
  const doc = svg.ownerDocument;
  svg.replaceChildren();
  const height = layout.length * (BAR_HEIGHT + 4) + 2 * BAR_HEIGHT;
  svg.setAttribute("height", String(Math.max(height, 60)));
  if (layout.length === 0) {
    const text = doc.createElementNS("http://www.w3.org/2000/svg", "text");
    text.setAttribute("x", "10");
    text.setAttribute("y", "30");
    text.setAttribute("class", "empty-state");
    text.textContent = "no H1 bars in this dataset";
    svg.appendChild(text);
    return;
  }
  for (const bar of layout) {
    const g = doc.createElementNS("http://www.w3.org/2000/svg", "g");
    g.setAttribute("class", bar.selected ? "bar selected" : "bar");
    g.setAttribute("data-bar-id", String(bar.id));

    const line = doc.createElementNS("http://www.w3.org/2000/svg", "line");
    line.setAttribute("x1", bar.x0.toFixed(1));
    line.setAttribute("x2", bar.x1.toFixed(1));
    line.setAttribute("y1", String(bar.y));
    line.setAttribute("y2", String(bar.y));
    line.setAttribute("stroke", bar.color);
    line.setAttribute("stroke-width", bar.selected ? "7" : "4");
    g.appendChild(line);

    if (bar.infinite) {
      const arrow = doc.createElementNS("http://www.w3.org/2000/svg", "path");
      const x = bar.x1;
      const y = bar.y;
      arrow.setAttribute("d", `M ${x} ${y - 5} L ${x + 7} ${y} L ${x} ${y + 5} Z`);
      arrow.setAttribute("fill", bar.color);
      arrow.setAttribute("class", "inf-marker");
      g.appendChild(arrow);
    }

    const title = doc.createElementNS("http://www.w3.org/2000/svg", "title");
    title.textContent = bar.label;
    g.appendChild(title);

    g.addEventListener("click", () => onClick(bar.id));
    svg.appendChild(g);
  }
}
