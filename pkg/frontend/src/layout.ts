// Deterministic layered layout for directed acyclic graphs: sources sit in
// layer 0 (producers on the left), every other node one layer right of its
// deepest predecessor, rows ordered by predecessor barycenter with id as the
// tie break. The same document always yields the same coordinates.

export interface LayoutNode {
  id: string;
  layer: number;
  row: number;
  x: number;
  y: number;
}

export interface LayoutEdge {
  from: string;
  to: string;
}

export const LAYER_SPACING = 170;
export const ROW_SPACING = 80;
export const MARGIN = 60;

export function layeredLayout(
  ids: string[],
  edges: LayoutEdge[],
): Map<string, LayoutNode> {
  const known = new Set(ids);
  const preds = new Map<string, string[]>();
  const succs = new Map<string, string[]>();
  for (const id of ids) {
    preds.set(id, []);
    succs.set(id, []);
  }
  for (const edge of edges) {
    if (known.has(edge.from) && known.has(edge.to)) {
      preds.get(edge.to)!.push(edge.from);
      succs.get(edge.from)!.push(edge.to);
    }
  }

  // longest-path layering via Kahn order
  const layer = new Map<string, number>();
  const indegree = new Map<string, number>();
  for (const id of ids) indegree.set(id, preds.get(id)!.length);
  const queue = ids.filter((id) => indegree.get(id) === 0).sort();
  for (const id of queue) layer.set(id, 0);
  while (queue.length) {
    const id = queue.shift()!;
    for (const next of succs.get(id)!) {
      layer.set(next, Math.max(layer.get(next) ?? 0, (layer.get(id) ?? 0) + 1));
      indegree.set(next, indegree.get(next)! - 1);
      if (indegree.get(next) === 0) queue.push(next);
    }
  }
  // cyclic leftovers (invalid graphs still need to render): park them after the end
  const maxLayer = Math.max(0, ...layer.values());
  for (const id of ids) {
    if (!layer.has(id)) layer.set(id, maxLayer + 1);
  }

  const byLayer = new Map<number, string[]>();
  for (const id of [...ids].sort()) {
    const l = layer.get(id)!;
    if (!byLayer.has(l)) byLayer.set(l, []);
    byLayer.get(l)!.push(id);
  }

  const out = new Map<string, LayoutNode>();
  const layers = [...byLayer.keys()].sort((a, b) => a - b);
  for (const l of layers) {
    const members = byLayer.get(l)!;
    members.sort((a, b) => {
      const center = (id: string): number => {
        const rows = preds.get(id)!
          .map((p) => out.get(p)?.row)
          .filter((r): r is number => r !== undefined);
        return rows.length ? rows.reduce((s, r) => s + r, 0) / rows.length : 0;
      };
      const diff = center(a) - center(b);
      return diff !== 0 ? diff : a < b ? -1 : 1;
    });
    members.forEach((id, row) => {
      out.set(id, {
        id,
        layer: l,
        row,
        x: MARGIN + l * LAYER_SPACING,
        y: MARGIN + row * ROW_SPACING,
      });
    });
  }
  return out;
}
