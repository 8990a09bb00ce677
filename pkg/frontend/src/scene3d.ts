import type { CycleRecord } from "./types.js";

export interface Camera {
  theta: number; // azimuth, radians
  phi: number; // elevation, radians
  dist: number;
  cx: number;
  cy: number;
  cz: number;
}

export const MAX_DRAWN_POINTS = 50_000;

export function initialCamera(points: [number, number, number][]): Camera {
  let cx = 0, cy = 0, cz = 0;
  for (const [x, y, z] of points) {
    cx += x; cy += y; cz += z;
  }
  const n = Math.max(points.length, 1);
  cx /= n; cy /= n; cz /= n;
  let radius = 1e-6;
  for (const [x, y, z] of points) {
    const d = Math.hypot(x - cx, y - cy, z - cz);
    if (d > radius) radius = d;
  }
  return { theta: 0.6, phi: 0.35, dist: radius * 2.6, cx, cy, cz };
}

/** Orthographic-ish orbit projection to canvas coordinates plus depth. */
export function project(
  p: [number, number, number],
  cam: Camera,
  width: number,
  height: number,
): [number, number, number] {
  const x = p[0] - cam.cx;
  const y = p[1] - cam.cy;
  const z = p[2] - cam.cz;
  const ct = Math.cos(cam.theta), st = Math.sin(cam.theta);
  const cp = Math.cos(cam.phi), sp = Math.sin(cam.phi);
  // rotate around z (azimuth), then x (elevation)
  const rx = ct * x + st * y;
  const ry = -st * x + ct * y;
  const vy = cp * ry - sp * z;
  const vz = sp * ry + cp * z;
  const scale = (Math.min(width, height) / cam.dist) * 0.9;
  return [width / 2 + rx * scale, height / 2 - vz * scale, vy];
}

/** Display stride so at most MAX_DRAWN_POINTS scatter points are drawn. */
export function lodStride(n: number, cap: number = MAX_DRAWN_POINTS): number {
  return n <= cap ? 1 : Math.ceil(n / cap);
}

export class PointScene {
  camera: Camera;
  private dragging = false;
  private lastX = 0;
  private lastY = 0;

  constructor(
    private canvas: HTMLCanvasElement,
    private points: [number, number, number][],
    private redrawOverlays: () => { record: CycleRecord; color: string }[],
  ) {
    this.camera = initialCamera(points);
    canvas.addEventListener("mousedown", (e) => {
      this.dragging = true;
      this.lastX = e.clientX;
      this.lastY = e.clientY;
    });
    canvas.addEventListener("mousemove", (e) => {
      if (!this.dragging) return;
      this.camera.theta += (e.clientX - this.lastX) * 0.008;
      this.camera.phi += (e.clientY - this.lastY) * 0.008;
      this.camera.phi = Math.max(-1.5, Math.min(1.5, this.camera.phi));
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
      this.camera.dist *= e.deltaY > 0 ? 1.1 : 0.9;
      this.render();
    });
  }

  render(): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const { width, height } = this.canvas;
    ctx.clearRect(0, 0, width, height);
    ctx.fillStyle = "#0e1116";
    ctx.fillRect(0, 0, width, height);

    // the scatter may be thinned for display; overlays never are
    const stride = lodStride(this.points.length);
    ctx.fillStyle = "#9aa7b5";
    for (let i = 0; i < this.points.length; i += stride) {
      const [sx, sy] = project(this.points[i], this.camera, width, height);
      ctx.fillRect(sx - 1, sy - 1, 2, 2);
    }

    for (const { record, color } of this.redrawOverlays()) {
      ctx.strokeStyle = color;
      ctx.lineWidth = 2.5;
      ctx.beginPath();
      for (const [u, v] of record.edges) {
        const a = this.points[u - 1];
        const b = this.points[v - 1];
        if (!a || !b) continue;
        const [ax, ay] = project(a, this.camera, width, height);
        const [bx, by] = project(b, this.camera, width, height);
        ctx.moveTo(ax, ay);
        ctx.lineTo(bx, by);
      }
      ctx.stroke();
    }
  }
}
