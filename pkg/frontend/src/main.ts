// Entry point: wires the new-game form and the board to the service.

import { ApiError, GameApi } from "./api.js";
import type { Role, EngineMode, SessionState } from "./api.js";
import { GameClient } from "./game-client.js";
import {
  permutationProblem,
  parsePermutationInput,
  projectBoard,
  toggleSelection,
} from "./state.js";
import {
  renderBoard,
  renderError,
  renderHint,
  renderLegend,
  renderMoveLog,
  renderWinner,
} from "./board.js";

function must<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

const api = new GameApi("");
let selection: number[] = [];
let lastSession: SessionState | null = null;
let lastPile: number[] = [];
let lastPrevious: number[] | null = null;
let lastHint: { sg: number; winning_moves: { p: number; q: number }[] } | null = null;
let hintError = "";

const boardRoot = must<HTMLDivElement>("board");
const legendRoot = must<HTMLDivElement>("legend");
const logRoot = must<HTMLDivElement>("move-log");
const bannerRoot = must<HTMLDivElement>("banner");
const hintRoot = must<HTMLDivElement>("hint-panel");
const errorRoot = must<HTMLDivElement>("error");

const client = new GameClient(api, {
  onState(session, pile, previous) {
    lastSession = session;
    lastPile = pile;
    lastPrevious = previous;
    selection = [];
    redraw();
  },
  onHint(hint, error) {
    lastHint = hint;
    hintError = error;
    redraw();
  },
  onRejected(message, legal) {
    renderError(errorRoot, message, legal);
  },
});

const callbacks = {
  onBadgeClick(pointer: number) {
    selection = toggleSelection(selection, pointer);
    redraw();
  },
  onSubmit() {
    const view = lastSession
      ? projectBoard(lastSession, lastPile, selection, lastPrevious)
      : null;
    if (view?.candidate && view.canSubmit) {
      void client.play(view.candidate);
    }
  },
  onHintToggle(show: boolean) {
    void client.setHints(show);
  },
};

function redraw(): void {
  if (!lastSession) return;
  const view = projectBoard(lastSession, lastPile, selection, lastPrevious);
  renderBoard(boardRoot, view, lastSession, callbacks);
  renderLegend(legendRoot, lastSession, lastPile);
  renderMoveLog(logRoot, lastSession.move_log, lastSession.human_role);
  renderWinner(bannerRoot, lastSession);
  renderHint(hintRoot, lastHint, hintError, client.showingHints, callbacks);
}

// --- new game form ------------------------------------------------------

const permInput = must<HTMLInputElement>("perm-input");
const permProblem = must<HTMLSpanElement>("perm-problem");
const pilePicker = must<HTMLDivElement>("pile-picker");
const roleSelect = must<HTMLSelectElement>("role-select");
const engineSelect = must<HTMLSelectElement>("engine-select");
const startButton = must<HTMLButtonElement>("start-game");
const formError = must<HTMLSpanElement>("form-error");

let pickedTargets = new Set<number>();
let formPile: number[] = [];

async function onPermChanged(): Promise<void> {
  const problem = permutationProblem(permInput.value);
  permProblem.textContent = problem;
  pilePicker.textContent = "";
  pickedTargets = new Set();
  formPile = [];
  startButton.disabled = true;
  if (problem) return;
  const values = parsePermutationInput(permInput.value);
  if (!values) return;
  const inspection = await api.inspect(values);
  formPile = inspection.strategic_pile.elements;
  if (formPile.length === 0) {
    permProblem.textContent = inspection.fixed_point
      ? "already a fixed point (no game to play)"
      : "sortable permutation: the second player always wins";
  }
  for (const element of formPile) {
    const box = document.createElement("button");
    box.className = "pick";
    box.textContent = String(element);
    box.addEventListener("click", () => {
      if (pickedTargets.has(element)) pickedTargets.delete(element);
      else pickedTargets.add(element);
      box.classList.toggle("picked");
    });
    pilePicker.appendChild(box);
  }
  startButton.disabled = false;
}

permInput.addEventListener("change", () => void onPermChanged());
permInput.addEventListener("blur", () => void onPermChanged());

startButton.addEventListener("click", async () => {
  const values = parsePermutationInput(permInput.value);
  if (!values) return;
  formError.textContent = "";
  try {
    await client.create({
      permutation: values,
      targets: [...pickedTargets].sort((a, b) => a - b),
      human_role: roleSelect.value as Role,
      engine: engineSelect.value as EngineMode,
    });
    must<HTMLDivElement>("game-area").classList.add("active");
  } catch (error) {
    formError.textContent =
      error instanceof ApiError ? String(error.message) : "could not create the game";
  }
});
