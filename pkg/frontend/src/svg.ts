// Minimal deterministic SVG emitter. No DOM, no timestamps, fixed
// coordinate formatting, so identical inputs give byte-identical files.

export interface Frame {
  // pixel box
  x0: number;
  y0: number;
  w: number;
  h: number;
  // data ranges
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
}

const FG = "#222";

export function fmt(v: number): string {
  // 2 decimal places is below visual resolution and keeps files stable
  const s = v.toFixed(2);
  return s === "-0.00" ? "0.00" : s;
}

export function sx(f: Frame, x: number): number {
  return f.x0 + ((x - f.xmin) / (f.xmax - f.xmin)) * f.w;
}

export function sy(f: Frame, y: number): number {
  return f.y0 + f.h - ((y - f.ymin) / (f.ymax - f.ymin)) * f.h;
}

function inside(f: Frame, x: number, y: number): boolean {
  return x >= f.xmin && x <= f.xmax && y >= f.ymin && y <= f.ymax;
}

export function ticks(lo: number, hi: number, n = 5): number[] {
  const span = hi - lo;
  if (!(span > 0)) return [lo];
  const raw = span / n;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  let step = mag;
  for (const m of [1, 2, 5, 10]) {
    if (raw <= m * mag) {
      step = m * mag;
      break;
    }
  }
  const out: number[] = [];
  for (let t = Math.ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    out.push(Math.abs(t) < step * 1e-9 ? 0 : t);
  }
  return out;
}

function tickLabel(v: number): string {
  const a = Math.abs(v);
  if (a >= 1000 || (a > 0 && a < 0.01)) return v.toExponential(0);
  return String(Number(v.toPrecision(3)));
}

export interface AxesOpts {
  xlabel?: string;
  ylabel?: string;
  title?: string;
}

export function axes(f: Frame, opts: AxesOpts = {}): string {
  const parts: string[] = [];
  parts.push(
    `<rect x="${fmt(f.x0)}" y="${fmt(f.y0)}" width="${fmt(f.w)}" ` +
      `height="${fmt(f.h)}" fill="none" stroke="${FG}" stroke-width="1"/>`,
  );
  for (const t of ticks(f.xmin, f.xmax)) {
    const px = sx(f, t);
    const yb = f.y0 + f.h;
    parts.push(
      `<line x1="${fmt(px)}" y1="${fmt(yb)}" x2="${fmt(px)}" ` +
        `y2="${fmt(yb + 4)}" stroke="${FG}" stroke-width="1"/>`,
      `<text x="${fmt(px)}" y="${fmt(yb + 15)}" font-size="10" ` +
        `text-anchor="middle" fill="${FG}">${tickLabel(t)}</text>`,
    );
  }
  for (const t of ticks(f.ymin, f.ymax)) {
    const py = sy(f, t);
    parts.push(
      `<line x1="${fmt(f.x0 - 4)}" y1="${fmt(py)}" x2="${fmt(f.x0)}" ` +
        `y2="${fmt(py)}" stroke="${FG}" stroke-width="1"/>`,
      `<text x="${fmt(f.x0 - 6)}" y="${fmt(py + 3)}" font-size="10" ` +
        `text-anchor="end" fill="${FG}">${tickLabel(t)}</text>`,
    );
  }
  if (opts.xlabel) {
    parts.push(
      `<text x="${fmt(f.x0 + f.w / 2)}" y="${fmt(f.y0 + f.h + 30)}" ` +
        `font-size="12" text-anchor="middle" fill="${FG}">${opts.xlabel}</text>`,
    );
  }
  if (opts.ylabel) {
    const cx = f.x0 - 32;
    const cy = f.y0 + f.h / 2;
    parts.push(
      `<text x="${fmt(cx)}" y="${fmt(cy)}" font-size="12" ` +
        `text-anchor="middle" fill="${FG}" ` +
        `transform="rotate(-90 ${fmt(cx)} ${fmt(cy)})">${opts.ylabel}</text>`,
    );
  }
  if (opts.title) {
    parts.push(
      `<text x="${fmt(f.x0 + f.w / 2)}" y="${fmt(f.y0 - 8)}" ` +
        `font-size="12" text-anchor="middle" fill="${FG}">${opts.title}</text>`,
    );
  }
  return parts.join("\n");
}

export interface StrokeOpts {
  stroke?: string;
  width?: number;
  dash?: string; // e.g. "6 4"
}

export function polyline(
  f: Frame,
  xs: number[],
  ys: number[],
  opts: StrokeOpts = {},
): string {
  const pts: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    if (!Number.isFinite(xs[i]) || !Number.isFinite(ys[i])) continue;
    pts.push(`${fmt(sx(f, xs[i]))},${fmt(sy(f, ys[i]))}`);
  }
  if (pts.length === 0) return "";
  const dash = opts.dash ? ` stroke-dasharray="${opts.dash}"` : "";
  return (
    `<polyline points="${pts.join(" ")}" fill="none" ` +
    `stroke="${opts.stroke ?? FG}" stroke-width="${opts.width ?? 1.2}"${dash}/>`
  );
}

export function scatter(
  f: Frame,
  xs: number[],
  ys: number[],
  radius = 0.8,
  fill = FG,
): string {
  // one path of zero-length round-capped segments; points are quantized
  // to 0.1 px (invisible at panel scale) and deduplicated, which keeps
  // dense portraits to a sane file size
  const seen = new Set<string>();
  const segs: string[] = [];
  for (let i = 0; i < xs.length; i++) {
    if (!Number.isFinite(xs[i]) || !Number.isFinite(ys[i])) continue;
    if (!inside(f, xs[i], ys[i])) continue;
    const key = `M${sx(f, xs[i]).toFixed(1)} ${sy(f, ys[i]).toFixed(1)}`;
    if (seen.has(key)) continue;
    seen.add(key);
    segs.push(key + "h0");
  }
  if (segs.length === 0) return "";
  return (
    `<path d="${segs.join("")}" fill="none" stroke="${fill}" ` +
    `stroke-width="${2 * radius}" stroke-linecap="round"/>`
  );
}

export function text(
  x: number,
  y: number,
  s: string,
  size = 12,
  anchor = "start",
): string {
  return (
    `<text x="${fmt(x)}" y="${fmt(y)}" font-size="${size}" ` +
    `text-anchor="${anchor}" fill="${FG}">${s}</text>`
  );
}

export function document(width: number, height: number, body: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" ` +
    `height="${height}" viewBox="0 0 ${width} ${height}" ` +
    `font-family="sans-serif">\n` +
    `<rect width="${width}" height="${height}" fill="white"/>\n` +
    body +
    "\n</svg>\n"
  );
}
