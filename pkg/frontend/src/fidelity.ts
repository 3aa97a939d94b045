/**
 * Fidelity-versus-coupling figure: the ideal holonomic value as a solid
 * line, full-space and Zeno-restricted results as markers, and the
 * loop-free baseline dashed.  Only axis scaling is computed from the data.
 */

import type { FidelityRow } from "./schema.js";
import { document, fmt, linearTicks, tag } from "./svg.js";

export interface FidelityStyle {
  width: number;
  height: number;
  title: string;
}

export const defaultFidelityStyle: FidelityStyle = {
  width: 720,
  height: 480,
  title: "Fidelity vs coupling",
};

interface Series {
  key: keyof FidelityRow;
  label: string;
  color: string;
  kind: "line" | "dots" | "dashed";
}

export const seriesSpec: readonly Series[] = [
  { key: "fidelity_holonomic", label: "holonomic", color: "#333333", kind: "line" },
  { key: "fidelity_zeno", label: "Zeno-restricted", color: "#1f77b4", kind: "dots" },
  { key: "fidelity_full", label: "full space", color: "#d62728", kind: "dots" },
  { key: "fidelity_no_phi", label: "no-phase baseline", color: "#2ca02c", kind: "dashed" },
];

const MARGIN = { left: 64, right: 160, top: 40, bottom: 48 };

export function renderFidelity(
  rows: readonly FidelityRow[],
  style: FidelityStyle = defaultFidelityStyle,
): string {
  const { width, height, title } = style;
  const sorted = [...rows].sort((a, b) => a.g - b.g);
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const gMin = sorted[0]!.g;
  const gMax = sorted[sorted.length - 1]!.g;
  const gSpan = gMax > gMin ? gMax - gMin : 1;
  const values = sorted.flatMap((r) =>
    seriesSpec.map((s) => r[s.key] as number),
  );
  const vMin = Math.min(...values);
  const vMax = Math.max(...values);
  const pad = Math.max((vMax - vMin) * 0.1, 1e-4);
  const yLo = vMin - pad;
  const yHi = Math.min(vMax + pad, 1.0001);

  const sx = (g: number) => MARGIN.left + ((g - gMin) / gSpan) * plotW;
  const sy = (v: number) =>
    MARGIN.top + plotH - ((v - yLo) / (yHi - yLo)) * plotH;

  const elems: string[] = [];
  elems.push(
    tag(
      "text",
      {
        x: fmt(MARGIN.left + plotW / 2),
        y: 22,
        "text-anchor": "middle",
        "font-family": "sans-serif",
        "font-size": 16,
        fill: "#222222",
      },
      title,
    ),
  );

  // axes and ticks
  const axisAttrs = { stroke: "#444444", "stroke-width": 1 };
  elems.push(
    tag("line", {
      x1: fmt(MARGIN.left), y1: fmt(MARGIN.top + plotH),
      x2: fmt(MARGIN.left + plotW), y2: fmt(MARGIN.top + plotH),
      ...axisAttrs,
    }),
    tag("line", {
      x1: fmt(MARGIN.left), y1: fmt(MARGIN.top),
      x2: fmt(MARGIN.left), y2: fmt(MARGIN.top + plotH),
      ...axisAttrs,
    }),
  );
  for (const g of linearTicks(gMin, gMax, 6)) {
    const x = sx(g);
    elems.push(
      tag("line", {
        x1: fmt(x), y1: fmt(MARGIN.top + plotH),
        x2: fmt(x), y2: fmt(MARGIN.top + plotH + 5),
        ...axisAttrs,
      }),
      tag(
        "text",
        {
          x: fmt(x), y: fmt(MARGIN.top + plotH + 20),
          "text-anchor": "middle", "font-family": "sans-serif",
          "font-size": 12, fill: "#222222",
        },
        fmt(g, 0),
      ),
    );
  }
  for (const v of linearTicks(yLo, yHi, 6)) {
    const y = sy(v);
    elems.push(
      tag("line", {
        x1: fmt(MARGIN.left - 5), y1: fmt(y),
        x2: fmt(MARGIN.left), y2: fmt(y),
        ...axisAttrs,
      }),
      tag(
        "text",
        {
          x: fmt(MARGIN.left - 9), y: fmt(y + 4),
          "text-anchor": "end", "font-family": "sans-serif",
          "font-size": 12, fill: "#222222",
        },
        v.toFixed(3),
      ),
    );
  }
  elems.push(
    tag(
      "text",
      {
        x: fmt(MARGIN.left + plotW / 2), y: fmt(height - 10),
        "text-anchor": "middle", "font-family": "sans-serif",
        "font-size": 13, fill: "#222222",
      },
      "coupling g (units of the Rabi frequency)",
    ),
    tag(
      "text",
      {
        x: 16, y: fmt(MARGIN.top + plotH / 2),
        "text-anchor": "middle", "font-family": "sans-serif",
        "font-size": 13, fill: "#222222",
        transform: `rotate(-90 16 ${fmt(MARGIN.top + plotH / 2)})`,
      },
      "fidelity",
    ),
  );

  // series
  for (const series of seriesSpec) {
    const pts = sorted.map((r) => [sx(r.g), sy(r[series.key] as number)]);
    const d = pts
      .map(([x, y], i) => `${i === 0 ? "M" : "L"}${fmt(x!)} ${fmt(y!)}`)
      .join(" ");
    if (series.kind !== "dots") {
      elems.push(
        tag("path", {
          d,
          fill: "none",
          stroke: series.color,
          "stroke-width": 1.8,
          ...(series.kind === "dashed"
            ? { "stroke-dasharray": "6 4" }
            : {}),
          class: `series-${series.key}`,
        }),
      );
    }
    if (series.kind !== "line") {
      for (const [x, y] of pts) {
        elems.push(
          tag("circle", {
            cx: fmt(x!), cy: fmt(y!), r: 4,
            fill: series.color,
            class: `series-${series.key}`,
          }),
        );
      }
    }
  }

  // legend
  const lx = MARGIN.left + plotW + 16;
  seriesSpec.forEach((series, i) => {
    const ly = MARGIN.top + 16 + i * 22;
    if (series.kind === "dots") {
      elems.push(
        tag("circle", { cx: fmt(lx + 12), cy: fmt(ly - 4), r: 4, fill: series.color }),
      );
    } else {
      elems.push(
        tag("line", {
          x1: fmt(lx), y1: fmt(ly - 4), x2: fmt(lx + 24), y2: fmt(ly - 4),
          stroke: series.color, "stroke-width": 2,
          ...(series.kind === "dashed" ? { "stroke-dasharray": "6 4" } : {}),
        }),
      );
    }
    elems.push(
      tag(
        "text",
        {
          x: fmt(lx + 32), y: fmt(ly),
          "font-family": "sans-serif", "font-size": 12, fill: "#222222",
        },
        series.label,
      ),
    );
  });

  return document(width, height, elems);
}
