// Typed client for the cdsgame REST API. The server is the single source
// of truth for game rules; this module only moves JSON around.

export type Role = "ONE" | "TWO";
export type EngineMode = "optimal" | "random";

export interface Move {
  p: number;
  q: number;
}

export interface SessionState {
  id: string;
  permutation: number[];
  targets: number[];
  mover: Role;
  legal_moves: Move[];
  finished: boolean;
  winner: Role | null;
  move_log: Move[];
  human_role: Role;
  engine_mode: EngineMode;
  initial_permutation: number[];
  initial_targets: number[];
}

export interface Hint {
  sg: number;
  winning_moves: Move[];
}

export interface Inspection {
  permutation: number[];
  strategic_pile: { elements: number[]; trace: number[] };
  sortable: boolean;
  fixed_point: boolean;
  context_count: number;
  duration: number | null;
}

export interface CreateGameRequest {
  permutation: number[];
  targets: number[];
  human_role: Role;
  engine: EngineMode;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(typeof detail === "string" ? detail : `request failed (${status})`);
  }

  /** Legal moves echoed by an illegal-move rejection, when present. */
  legalMoves(): Move[] {
    if (
      this.detail &&
      typeof this.detail === "object" &&
      Array.isArray((this.detail as { legal_moves?: Move[] }).legal_moves)
    ) {
      return (this.detail as { legal_moves: Move[] }).legal_moves;
    }
    return [];
  }
}

export class GameApi {
  constructor(
    private readonly base: string = "",
    private readonly fetchImpl: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.base}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    if (response.status === 204) {
      return undefined as T;
    }
    const body = await response.json().catch(() => null);
    if (!response.ok) {
      const detail =
        body && typeof body === "object" && "detail" in body
          ? (body as { detail: unknown }).detail
          : body;
      throw new ApiError(response.status, detail);
    }
    return body as T;
  }

  async createGame(request: CreateGameRequest): Promise<SessionState> {
    const created = await this.request<{ id: string; state: SessionState }>(
      "/api/games",
      { method: "POST", body: JSON.stringify(request) },
    );
    return created.state;
  }

  getGame(id: string): Promise<SessionState> {
    return this.request(`/api/games/${id}`);
  }

  move(id: string, move: Move): Promise<SessionState> {
    return this.request(`/api/games/${id}/moves`, {
      method: "POST",
      body: JSON.stringify(move),
    });
  }

  hint(id: string): Promise<Hint> {
    return this.request(`/api/games/${id}/hint`);
  }

  deleteGame(id: string): Promise<void> {
    return this.request(`/api/games/${id}`, { method: "DELETE" });
  }

  inspect(permutation: number[]): Promise<Inspection> {
    return this.request("/api/inspect", {
      method: "POST",
      body: JSON.stringify({ permutation }),
    });
  }
}
