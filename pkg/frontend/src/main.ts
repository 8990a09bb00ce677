import { ApiClient } from "./api.js";
import { layoutBars, renderBarcode } from "./barcode.js";
import { ImageScene } from "./scene2d.js";
import { PointScene } from "./scene3d.js";
import { Store } from "./state.js";
import { showToast } from "./toast.js";

async function boot(): Promise<void> {
  const api = new ApiClient();
  const store = new Store(api);

  const svg = document.getElementById("barcode") as unknown as SVGSVGElement;
  const canvas = document.getElementById("scene") as HTMLCanvasElement;
  const header = document.getElementById("dataset-name") as HTMLElement;
  const toast = document.getElementById("toast") as HTMLElement;

  store.on("error", (message) => showToast(toast, message));

  try {
    await store.load();
  } catch (err) {
    showToast(toast, `backend unreachable: ${err instanceof Error ? err.message : err}`, 60000);
    return;
  }

  const meta = store.meta!;
  header.textContent = `${meta.name} — ${meta.kind}, ${meta.cells.total} cells, ${meta.intervals} bars`;

  let scene: PointScene | ImageScene | null = null;
  try {
    const geometry = await api.geometry();
    if (geometry.kind === "points") {
      scene = new PointScene(canvas, geometry.points, () => store.overlays());
    } else if (geometry.kind === "image") {
      scene = new ImageScene(canvas, geometry, () => store.overlays());
    }
  } catch (err) {
    showToast(toast, `geometry unavailable: ${err instanceof Error ? err.message : err}`);
  }

  const redraw = () => {
    const layout = layoutBars(
      store.barcode,
      store.barOrder(),
      (id) => store.colorOf(id),
      (id) => store.isSelected(id),
      svg.clientWidth || 360,
    );
    renderBarcode(svg, layout, (id) => void store.toggleBar(id));
    scene?.render();
  };

  store.on("change", redraw);
  redraw();
}

void boot();
