/** Tiny deterministic SVG assembly helpers (pure string building). */

export function fmt(v: number, digits = 2): string {
  const s = v.toFixed(digits);
  return s === "-0." + "0".repeat(digits) ? s.slice(1) : s;
}

export function tag(
  name: string,
  attrs: Record<string, string | number>,
  children?: string,
): string {
  const body = Object.entries(attrs)
    .map(([k, v]) => `${k}="${v}"`)
    .join(" ");
  return children === undefined
    ? `<${name} ${body}/>`
    : `<${name} ${body}>${children}</${name}>`;
}

export function document(
  width: number,
  height: number,
  children: string[],
): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    ...children,
    "</svg>",
    "",
  ].join("\n");
}

/** Evenly spaced "nice" tick values covering [lo, hi]. */
export function linearTicks(lo: number, hi: number, count = 5): number[] {
  if (!(hi > lo)) return [lo];
  const rawStep = (hi - lo) / (count - 1);
  const mag = 10 ** Math.floor(Math.log10(rawStep));
  const norm = rawStep / mag;
  const step = (norm >= 5 ? 5 : norm >= 2 ? 2 : 1) * mag;
  const start = Math.ceil(lo / step) * step;
  const ticks: number[] = [];
  for (let v = start; v <= hi + step * 1e-9; v += step) {
    ticks.push(Number(v.toPrecision(12)));
  }
  return ticks;
}
