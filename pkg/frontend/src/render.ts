// SVG rendering as pure string builders, so graph output is testable without
// a DOM. Shapes: producers and consumers are ellipses, actions and internal
// components boxes; persistent links draw solid and thick, volatile dashed.
// Elements named in an error response get the "highlight" class.

import type { ArchitectureDoc, ResultDoc, ScenarioDoc } from "./types.js";
import { LAYER_SPACING, MARGIN, ROW_SPACING, layeredLayout } from "./layout.js";

const NODE_W = 118;
const NODE_H = 46;

export interface RenderOptions {
  selected?: string | null;
  highlighted?: string[];
  addedComponents?: string[];
  removedReference?: string[];
}

function esc(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function classes(...parts: (string | false | undefined | null)[]): string {
  return parts.filter(Boolean).join(" ");
}

function svgOpen(width: number, height: number): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${width} ${height}" ` +
    `width="${width}" height="${height}">` +
    `<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" ` +
    `markerWidth="7" markerHeight="7" orient="auto-start-reverse">` +
    `<path d="M 0 0 L 10 5 L 0 10 z" fill="#555"></path></marker></defs>`
  );
}

function nodeShape(
  id: string,
  x: number,
  y: number,
  label: string,
  sublabel: string,
  rounded: boolean,
  cls: string,
): string {
  const shape = rounded
    ? `<ellipse class="shape" cx="${x}" cy="${y}" rx="${NODE_W / 2}" ry="${NODE_H / 2 + 4}"></ellipse>`
    : `<rect class="shape" x="${x - NODE_W / 2}" y="${y - NODE_H / 2}" width="${NODE_W}" height="${NODE_H}" rx="6"></rect>`;
  const sub = sublabel
    ? `<text class="sublabel" x="${x}" y="${y + 14}" text-anchor="middle">${esc(sublabel)}</text>`
    : "";
  return (
    `<g class="${cls}" data-element="${esc(id)}">` +
    shape +
    `<text class="label" x="${x}" y="${y + (sublabel ? -2 : 5)}" text-anchor="middle">${esc(label)}</text>` +
    sub +
    `</g>`
  );
}

function edgeLine(
  id: string,
  x1: number,
  y1: number,
  x2: number,
  y2: number,
  label: string,
  cls: string,
): string {
  const midX = (x1 + x2) / 2;
  const midY = (y1 + y2) / 2 - 6;
  return (
    `<g class="${cls}" data-element="${esc(id)}">` +
    `<line x1="${x1 + NODE_W / 2}" y1="${y1}" x2="${x2 - NODE_W / 2}" y2="${y2}" marker-end="url(#arrow)"></line>` +
    `<text class="edge-label" x="${midX}" y="${midY}" text-anchor="middle">${esc(label)}</text>` +
    `</g>`
  );
}

function canvasSize(layout: Map<string, { layer: number; row: number }>): [number, number] {
  let maxLayer = 0;
  let maxRow = 0;
  for (const node of layout.values()) {
    maxLayer = Math.max(maxLayer, node.layer);
    maxRow = Math.max(maxRow, node.row);
  }
  return [
    2 * MARGIN + maxLayer * LAYER_SPACING + NODE_W,
    2 * MARGIN + maxRow * ROW_SPACING + NODE_H,
  ];
}

export function renderScenarioSvg(scenario: ScenarioDoc, options: RenderOptions = {}): string {
  const highlighted = new Set(options.highlighted ?? []);
  const layout = layeredLayout(
    scenario.nodes.map((n) => n.id),
    scenario.edges.map((e) => ({ from: e.from, to: e.to })),
  );
  const [width, height] = canvasSize(layout);
  const parts = [svgOpen(width, height)];
  for (const edge of scenario.edges) {
    const from = layout.get(edge.from);
    const to = layout.get(edge.to);
    if (!from || !to) continue;
    const cls = classes(
      "edge",
      "volatile",
      highlighted.has(edge.id) && "highlight",
      options.selected === edge.id && "selected",
    );
    parts.push(edgeLine(edge.id, from.x, from.y, to.x, to.y, `${edge.id} @${edge.frequency}`, cls));
  }
  for (const node of scenario.nodes) {
    const pos = layout.get(node.id);
    if (!pos) continue;
    const sublabel =
      node.kind === "action"
        ? node.action?.subtype ?? ""
        : node.kind === "consumer"
          ? node.delivery_guarantee ?? ""
          : "";
    const cls = classes(
      "node",
      node.kind,
      highlighted.has(node.id) && "highlight",
      options.selected === node.id && "selected",
    );
    parts.push(nodeShape(node.id, pos.x, pos.y, node.id, sublabel, node.kind !== "action", cls));
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderArchitectureSvg(arch: ArchitectureDoc, options: RenderOptions = {}): string {
  const highlighted = new Set(options.highlighted ?? []);
  const added = new Set(options.addedComponents ?? []);
  const layout = layeredLayout(
    arch.components.map((c) => c.id),
    arch.links.map((l) => ({ from: l.from, to: l.to })),
  );
  const [width, height] = canvasSize(layout);
  const parts = [svgOpen(width, height)];
  for (const link of arch.links) {
    const from = layout.get(link.from);
    const to = layout.get(link.to);
    if (!from || !to) continue;
    const cls = classes(
      "edge",
      link.persistent ? "persistent" : "volatile",
      highlighted.has(link.id) && "highlight",
      options.selected === link.id && "selected",
    );
    const label = link.persistent ? `${link.id} [persistent]` : link.id;
    parts.push(edgeLine(link.id, from.x, from.y, to.x, to.y, label, cls));
  }
  for (const comp of arch.components) {
    const pos = layout.get(comp.id);
    if (!pos) continue;
    const boundary = comp.class === "external_producer" || comp.class === "external_consumer";
    const cls = classes(
      "component",
      comp.class,
      boundary && "boundary",
      added.has(comp.id) && "added",
      highlighted.has(comp.id) && "highlight",
      options.selected === comp.id && "selected",
    );
    parts.push(nodeShape(comp.id, pos.x, pos.y, comp.id, boundary ? "" : comp.class, boundary, cls));
  }
  parts.push("</svg>");
  return parts.join("");
}

export function renderCostPanel(result: ResultDoc, nodeId: string): string {
  const rows: string[] = [];
  for (const flow of result.flows) {
    const costs = flow.costs[nodeId];
    if (!costs) continue;
    const chosen = flow.assignment[nodeId];
    const cell = (cls: keyof typeof costs) => {
      const value = costs[cls];
      const text = value === null ? "unsupported" : String(value);
      const mark = chosen === cls ? " chosen" : "";
      return `<td class="cost${mark}">${esc(text)}${chosen === cls ? " ✓" : ""}</td>`;
    };
    rows.push(
      `<tr><th>${esc(flow.consumer)}</th>` +
        cell("state_centric") +
        cell("data_centric_batch") +
        cell("data_centric_stream") +
        `</tr>`,
    );
  }
  if (!rows.length) {
    return `<p class="muted">No cost breakdown: ${esc(nodeId)} is not an internal node.</p>`;
  }
  return (
    `<table class="costs"><thead><tr><th>flow</th><th>state-centric</th>` +
    `<th>batch</th><th>stream</th></tr></thead><tbody>${rows.join("")}</tbody></table>`
  );
}
