import type { CycleRecord, ImageGeometry } from "./types.js";
import { decodeBase64Pgm } from "./pgm.js";

/** Pannable, zoomable raster; overlays join pixel centers (half-pixel offset). */
export class ImageScene {
  zoom: number;
  panX = 0;
  panY = 0;
  private raster: ImageData | null = null;
  private width: number;
  private height: number;
  private vertexPixel: Map<number, [number, number]>;
  private dragging = false;
  private lastX = 0;
  private lastY = 0;

  constructor(
    private canvas: HTMLCanvasElement,
    geometry: ImageGeometry,
    private redrawOverlays: () => { record: CycleRecord; color: string }[],
  ) {
    const img = decodeBase64Pgm(geometry.pgm_base64);
    this.width = img.width;
    this.height = img.height;
    this.zoom = Math.max(
      1,
      Math.floor(Math.min(canvas.width / img.width, canvas.height / img.height)),
    );
    this.vertexPixel = new Map(
      Object.entries(geometry.vertex_pixels).map(([vid, rc]) => [Number(vid), rc]),
    );
    if (typeof ImageData !== "undefined") {
      this.raster = new ImageData(img.width, img.height);
      for (let i = 0; i < img.pixels.length; i++) {
        const v = img.pixels[i];
        this.raster.data[4 * i] = v;
        this.raster.data[4 * i + 1] = v;
        this.raster.data[4 * i + 2] = v;
        this.raster.data[4 * i + 3] = 255;
      }
    }
    canvas.addEventListener("mousedown", (e) => {
      this.dragging = true;
      this.lastX = e.clientX;
      this.lastY = e.clientY;
    });
    canvas.addEventListener("mousemove", (e) => {
      if (!this.dragging) return;
      this.panX += e.clientX - this.lastX;
      this.panY += e.clientY - this.lastY;
      this.lastX = e.clientX;
      this.lastY = e.clientY;
      this.render();
    });
    for (const ev of ["mouseup", "mouseleave"]) {
      canvas.addEventListener(ev, () => {
        this.dragging = false;
      });
    }
    canvas.addEventListener("wheel", (e) => {
      e.preventDefault();
      this.zoom = Math.max(0.25, this.zoom * (e.deltaY > 0 ? 0.85 : 1.18));
      this.render();
    });
  }

  /** Canvas position of a vertex cell: its pixel center, panned and zoomed. */
  vertexToCanvas(vertexId: number): [number, number] | null {
    const rc = this.vertexPixel.get(vertexId);
    if (!rc) return null;
    const [r, c] = rc;
    return [this.panX + (c + 0.5) * this.zoom, this.panY + (r + 0.5) * this.zoom];
  }

  render(): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    ctx.fillStyle = "#0e1116";
    ctx.fillRect(0, 0, this.canvas.width, this.canvas.height);
    if (this.raster) {
      ctx.imageSmoothingEnabled = false;
      const off = this.canvas.ownerDocument.createElement("canvas");
      off.width = this.width;
      off.height = this.height;
      off.getContext("2d")?.putImageData(this.raster, 0, 0);
      ctx.drawImage(
        off, this.panX, this.panY, this.width * this.zoom, this.height * this.zoom,
      );
    }
    for (const { record, color } of this.redrawOverlays()) {
      ctx.strokeStyle = color;
      ctx.lineWidth = Math.max(1.5, this.zoom * 0.2);
      ctx.beginPath();
      for (const [u, v] of record.edges) {
        const a = this.vertexToCanvas(u);
        const b = this.vertexToCanvas(v);
        if (!a || !b) continue;
        ctx.moveTo(a[0], a[1]);
        ctx.lineTo(b[0], b[1]);
      }
      ctx.stroke();
    }
  }
}
