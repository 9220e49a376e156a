// Pure view-model logic: everything here is a projection of the server
// session plus the local pointer selection. No game rules live on the
// client; move legality always comes from the server's legal_moves.

import type { Move, SessionState } from "./api.js";

export interface PointerBadge {
  pointer: number; // p, meaning the value pair (p, p+1)
  selected: boolean;
  inLegalMove: boolean;
}

export interface GapView {
  index: number; // gap b sits after entry b (gap 0 is before the first)
  badges: PointerBadge[];
}

export interface EntryView {
  value: number;
  position: number; // 1-based
  inPile: boolean;
  isTarget: boolean;
  startsAdjacency: boolean; // value and value+1 sit side by side
  justMoved: boolean;
}

export interface BoardView {
  entries: EntryView[];
  gaps: GapView[];
  selection: number[];
  candidate: Move | null;
  canSubmit: boolean;
}

/** Parse a permutation typed into the new-game form; null when invalid. */
export function parsePermutationInput(text: string): number[] | null {
  const cleaned = text.trim().replace(/^\[/, "").replace(/\]$/, "");
  if (!cleaned) return null;
  const parts = cleaned.split(/[\s,]+/);
  const values = parts.map((part) => Number(part));
  if (values.some((v) => !Number.isInteger(v))) return null;
  const m = values.length;
  const seen = new Set(values);
  if (seen.size !== m) return null;
  for (let v = 1; v <= m; v += 1) {
    if (!seen.has(v)) return null;
  }
  return values;
}

/** Validation message for the form, empty when the input is a permutation. */
export function permutationProblem(text: string): string {
  if (!text.trim()) return "enter a permutation, e.g. 8 1 5 2 4 3 7 6";
  const cleaned = text.trim().replace(/^\[/, "").replace(/\]$/, "");
  const parts = cleaned.split(/[\s,]+/).filter(Boolean);
  const values = parts.map(Number);
  if (values.some((v) => !Number.isInteger(v))) return "entries must be integers";
  const m = values.length;
  if (new Set(values).size !== m) return "duplicate entry";
  for (let v = 1; v <= m; v += 1) {
    if (!values.includes(v)) return `values must be exactly 1..${m} (missing ${v})`;
  }
  return "";
}

/** Toggle a pointer in the selection, keeping at most two distinct pointers. */
export function toggleSelection(selection: number[], pointer: number): number[] {
  if (selection.includes(pointer)) {
    return selection.filter((p) => p !== pointer);
  }
  if (selection.length >= 2) {
    return [selection[1]!, pointer];
  }
  return [...selection, pointer];
}

export function candidateMove(selection: number[]): Move | null {
  if (selection.length !== 2) return null;
  const [a, b] = [...selection].sort((x, y) => x - y);
  return { p: a!, q: b! };
}

export function moveKey(move: Move): string {
  const [a, b] = move.p < move.q ? [move.p, move.q] : [move.q, move.p];
  return `${a},${b}`;
}

export function isLegal(move: Move | null, legal: Move[]): boolean {
  if (!move) return false;
  const key = moveKey(move);
  return legal.some((candidate) => moveKey(candidate) === key);
}

/** Pointers whose occurrences touch a gap: right pointer of the entry
 *  before it and left pointer of the entry after it (boundary pairs
 *  are not pointers and are skipped). */
export function pointersAtGap(permutation: number[], gap: number): number[] {
  const m = permutation.length;
  const found: number[] = [];
  if (gap >= 1) {
    const before = permutation[gap - 1]!;
    if (before <= m - 1) found.push(before);
  }
  if (gap <= m - 1) {
    const after = permutation[gap]!;
    if (after - 1 >= 1) found.push(after - 1);
  }
  return [...new Set(found)].sort((a, b) => a - b);
}

/** Positions whose value changed between two boards (for move animation). */
export function movedPositions(before: number[], after: number[]): number[] {
  const moved: number[] = [];
  for (let i = 0; i < after.length; i += 1) {
    if (before[i] !== after[i]) moved.push(i + 1);
  }
  return moved;
}

export function projectBoard(
  session: SessionState,
  pile: number[],
  selection: number[],
  previous: number[] | null,
): BoardView {
  const perm = session.permutation;
  const m = perm.length;
  const pileSet = new Set(pile);
  const targetSet = new Set(session.targets);
  const legal = session.legal_moves;
  const legalPointers = new Set<number>();
  for (const move of legal) {
    legalPointers.add(move.p);
    legalPointers.add(move.q);
  }
  const moved = new Set(previous ? movedPositions(previous, perm) : []);
  const entries: EntryView[] = perm.map((value, i) => ({
    value,
    position: i + 1,
    inPile: pileSet.has(value),
    isTarget: targetSet.has(value),
    startsAdjacency: i + 1 < m && perm[i + 1] === value + 1,
    justMoved: moved.has(i + 1),
  }));
  const gaps: GapView[] = [];
  for (let gap = 0; gap <= m; gap += 1) {
    gaps.push({
      index: gap,
      badges: pointersAtGap(perm, gap).map((pointer) => ({
        pointer,
        selected: selection.includes(pointer),
        inLegalMove: legalPointers.has(pointer),
      })),
    });
  }
  const candidate = candidateMove(selection);
  return {
    entries,
    gaps,
    selection,
    candidate,
    canSubmit: isLegal(candidate, legal),
  };
}
