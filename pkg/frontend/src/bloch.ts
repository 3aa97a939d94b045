/**
 * Bloch-sphere scatter: unit-sphere wireframe plus one marker per CSV row,
 * drawn with a fixed orthographic projection so identical input yields
 * byte-identical SVG.
 */

import type { BlochRow } from "./schema.js";
import { document, fmt, tag } from "./svg.js";

export interface BlochStyle {
  width: number;
  height: number;
  pointRadius: number;
  title: string;
}

export const defaultBlochStyle: BlochStyle = {
  width: 640,
  height: 640,
  pointRadius: 2.2,
  title: "Bloch-sphere coverage",
};

// fixed viewing angles (orthographic): azimuth then elevation
const AZIMUTH = Math.PI / 7;
const ELEVATION = Math.PI / 9;

interface Projected {
  sx: number;
  sy: number;
  depth: number;
}

function project(
  x: number,
  y: number,
  z: number,
  cx: number,
  cy: number,
  radius: number,
): Projected {
  const ca = Math.cos(AZIMUTH);
  const sa = Math.sin(AZIMUTH);
  const ce = Math.cos(ELEVATION);
  const se = Math.sin(ELEVATION);
  const x1 = ca * x + sa * y;
  const y1 = -sa * x + ca * y;
  const z1 = z;
  const y2 = ce * y1 - se * z1; // depth toward the viewer
  const z2 = se * y1 + ce * z1;
  return { sx: cx + radius * x1, sy: cy - radius * z2, depth: y2 };
}

function wirePath(
  points: Array<[number, number, number]>,
  cx: number,
  cy: number,
  radius: number,
): string {
  const d = points
    .map(([x, y, z], i) => {
      const p = project(x, y, z, cx, cy, radius);
      return `${i === 0 ? "M" : "L"}${fmt(p.sx)} ${fmt(p.sy)}`;
    })
    .join(" ");
  return tag("path", {
    d,
    fill: "none",
    stroke: "#c8c8c8",
    "stroke-width": 0.6,
  });
}

function wireframe(cx: number, cy: number, radius: number): string[] {
  const elems: string[] = [
    tag("circle", {
      cx: fmt(cx),
      cy: fmt(cy),
      r: fmt(radius),
      fill: "none",
      stroke: "#888888",
      "stroke-width": 1,
    }),
  ];
  const samples = 72;
  for (let latDeg = -60; latDeg <= 60; latDeg += 30) {
    const lat = (latDeg * Math.PI) / 180;
    const ring: Array<[number, number, number]> = [];
    for (let i = 0; i <= samples; i++) {
      const lon = (2 * Math.PI * i) / samples;
      ring.push([
        Math.cos(lat) * Math.cos(lon),
        Math.cos(lat) * Math.sin(lon),
        Math.sin(lat),
      ]);
    }
    elems.push(wirePath(ring, cx, cy, radius));
  }
  for (let lonDeg = 0; lonDeg < 180; lonDeg += 30) {
    const lon = (lonDeg * Math.PI) / 180;
    const arc: Array<[number, number, number]> = [];
    for (let i = 0; i <= samples; i++) {
      const lat = -Math.PI / 2 + (Math.PI * i) / samples;
      arc.push([
        Math.cos(lat) * Math.cos(lon),
        Math.cos(lat) * Math.sin(lon),
        Math.sin(lat),
      ]);
    }
    elems.push(wirePath(arc, cx, cy, radius));
  }
  return elems;
}

/** Word length -> hue, short words blue, long words red. */
function pointColor(seqLen: number, maxLen: number): string {
  const t = maxLen > 0 ? Math.min(seqLen / maxLen, 1) : 0;
  const hue = Math.round(240 - 240 * t);
  return `hsl(${hue} 70% 45%)`;
}

export function renderBloch(
  rows: readonly BlochRow[],
  style: BlochStyle = defaultBlochStyle,
): string {
  const { width, height, pointRadius, title } = style;
  const cx = width / 2;
  const cy = height / 2 + 12;
  const radius = Math.min(width, height) * 0.42;
  const maxLen = rows.reduce((m, r) => Math.max(m, r.seq_len), 0);

  const projected = rows.map((row, index) => ({
    row,
    index,
    p: project(row.x, row.y, row.z, cx, cy, radius),
  }));
  // far points first so near points overdraw them; index breaks ties so
  // the order is total and the output deterministic
  projected.sort((a, b) => a.p.depth - b.p.depth || a.index - b.index);

  const markers = projected.map(({ row, p }) =>
    tag("circle", {
      cx: fmt(p.sx),
      cy: fmt(p.sy),
      r: fmt(pointRadius, 1),
      fill: pointColor(row.seq_len, maxLen),
      "fill-opacity": p.depth < 0 ? "0.35" : "0.85",
      class: "bloch-point",
    }),
  );

  const caption = tag(
    "text",
    {
      x: fmt(cx),
      y: 24,
      "text-anchor": "middle",
      "font-family": "sans-serif",
      "font-size": 16,
      fill: "#222222",
    },
    `${title} (${rows.length} points)`,
  );

  return document(width, height, [
    caption,
    ...wireframe(cx, cy, radius),
    ...markers,
  ]);
}
