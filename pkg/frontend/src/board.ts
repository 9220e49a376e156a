// DOM rendering. Every render is a full rebuild from the BoardView
// projection, so a refresh reconstructs the identical board.

import type { Hint, Move, SessionState } from "./api.js";
import type { BoardView } from "./state.js";
import { moveKey } from "./state.js";

export interface BoardCallbacks {
  onBadgeClick(pointer: number): void;
  onSubmit(): void;
  onHintToggle(show: boolean): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderBoard(
  root: HTMLElement,
  view: BoardView,
  session: SessionState,
  callbacks: BoardCallbacks,
): void {
  root.textContent = "";
  const row = el("div", "board-row");
  view.gaps.forEach((gap, index) => {
    const gapNode = el("span", "gap");
    gapNode.dataset.gap = String(gap.index);
    for (const badge of gap.badges) {
      const badgeNode = el(
        "button",
        "badge" +
          (badge.selected ? " selected" : "") +
          (badge.inLegalMove ? " live" : " inert"),
        `${badge.pointer},${badge.pointer + 1}`,
      );
      badgeNode.dataset.pointer = String(badge.pointer);
      badgeNode.addEventListener("click", () => callbacks.onBadgeClick(badge.pointer));
      gapNode.appendChild(badgeNode);
    }
    row.appendChild(gapNode);
    const entry = view.entries[index];
    if (entry) {
      const entryNode = el(
        "span",
        "entry" +
          (entry.inPile ? " pile" : "") +
          (entry.isTarget ? " target" : "") +
          (entry.startsAdjacency ? " adjacency" : "") +
          (entry.justMoved ? " moved" : ""),
        String(entry.value),
      );
      entryNode.dataset.position = String(entry.position);
      row.appendChild(entryNode);
    }
  });
  root.appendChild(row);

  const controls = el("div", "controls");
  const submit = el("button", "submit", "swap selected pair");
  submit.disabled = !view.canSubmit || session.finished || session.mover !== session.human_role;
  submit.addEventListener("click", callbacks.onSubmit);
  controls.appendChild(submit);
  const status = el(
    "span",
    "status",
    session.finished
      ? `finished: ${session.winner} wins`
      : session.mover === session.human_role
        ? "your move"
        : "engine thinking",
  );
  controls.appendChild(status);
  root.appendChild(controls);
}

export function renderLegend(root: HTMLElement, session: SessionState, pile: number[]): void {
  root.textContent = "";
  root.appendChild(el("span", "chip pile", `strategic pile: {${pile.join(", ")}}`));
  root.appendChild(
    el("span", "chip target", `your targets: {${session.initial_targets.join(", ")}}`),
  );
  root.appendChild(el("span", "chip", `you are ${session.human_role}`));
  root.appendChild(el("span", "chip", `engine: ${session.engine_mode}`));
}

export function renderMoveLog(root: HTMLElement, moves: Move[], humanRole: string): void {
  root.textContent = "";
  const title = el("h3", undefined, "moves");
  root.appendChild(title);
  const list = el("ol", "move-log");
  moves.forEach((move, index) => {
    const byOne = index % 2 === 0;
    const who = byOne ? "ONE" : "TWO";
    const item = el(
      "li",
      who === humanRole ? "human-move" : "engine-move",
      `${who}: swap at ${moveKey(move)}`,
    );
    list.appendChild(item);
  });
  root.appendChild(list);
}

export function renderWinner(root: HTMLElement, session: SessionState): void {
  root.textContent = "";
  if (!session.finished || !session.winner) {
    root.classList.remove("visible");
    return;
  }
  root.classList.add("visible");
  const won = session.winner === session.human_role;
  root.appendChild(
    el(
      "div",
      "banner " + (won ? "won" : "lost"),
      won ? `you win (${session.winner})` : `engine wins (${session.winner})`,
    ),
  );
}

export function renderHint(
  root: HTMLElement,
  hint: Hint | null,
  error: string,
  shown: boolean,
  callbacks: BoardCallbacks,
): void {
  root.textContent = "";
  const toggle = el("button", "hint-toggle", shown ? "hide hints" : "show hints");
  toggle.addEventListener("click", () => callbacks.onHintToggle(!shown));
  root.appendChild(toggle);
  if (!shown) return;
  if (error) {
    root.appendChild(el("span", "hint-error", error));
    return;
  }
  if (!hint) return;
  root.appendChild(el("span", "hint-sg", `position value: ${hint.sg}`));
  const moves =
    hint.winning_moves.length === 0
      ? "no winning move from here"
      : `winning moves: ${hint.winning_moves.map(moveKey).join("  ")}`;
  root.appendChild(el("span", "hint-moves", moves));
}

export function renderError(root: HTMLElement, message: string, legal: Move[]): void {
  root.textContent = "";
  if (!message) return;
  root.appendChild(el("div", "error shake", message));
  if (legal.length) {
    root.appendChild(
      el("div", "legal-list", `legal pairs: ${legal.map(moveKey).join("  ")}`),
    );
  }
}
