// Session orchestration: one in-flight request per game, no optimistic
// updates. The board always re-renders from the latest server state.

import { ApiError, GameApi } from "./api.js";
import type { CreateGameRequest, Hint, Move, SessionState } from "./api.js";

export interface ClientEvents {
  onState(session: SessionState, pile: number[], previous: number[] | null): void;
  onHint(hint: Hint | null, error: string): void;
  onRejected(message: string, legal: Move[]): void;
}

export class GameClient {
  private session: SessionState | null = null;
  private pile: number[] = [];
  private busy = false;
  private hintsShown = false;

  constructor(
    private readonly api: GameApi,
    private readonly events: ClientEvents,
  ) {}

  get state(): SessionState | null {
    return this.session;
  }

  get showingHints(): boolean {
    return this.hintsShown;
  }

  private async exclusive<T>(work: () => Promise<T>): Promise<T | undefined> {
    if (this.busy) return undefined;
    this.busy = true;
    try {
      return await work();
    } finally {
      this.busy = false;
    }
  }

  private async publish(previous: number[] | null): Promise<void> {
    if (!this.session) return;
    this.pile = (await this.api.inspect(this.session.permutation)).strategic_pile.elements;
    this.events.onState(this.session, this.pile, previous);
    if (this.hintsShown) {
      await this.refreshHint();
    }
  }

  async create(request: CreateGameRequest): Promise<void> {
    await this.exclusive(async () => {
      this.session = await this.api.createGame(request);
      await this.publish(null);
    });
  }

  async refresh(): Promise<void> {
    await this.exclusive(async () => {
      if (!this.session) return;
      this.session = await this.api.getGame(this.session.id);
      await this.publish(null);
    });
  }

  async play(move: Move): Promise<void> {
    await this.exclusive(async () => {
      if (!this.session) return;
      const before = this.session.permutation;
      try {
        this.session = await this.api.move(this.session.id, move);
      } catch (error) {
        if (error instanceof ApiError && error.status === 422) {
          this.events.onRejected("that pair is not a valid context", error.legalMoves());
          return;
        }
        throw error;
      }
      this.events.onRejected("", []);
      await this.publish(before);
    });
  }

  async setHints(shown: boolean): Promise<void> {
    this.hintsShown = shown;
    if (shown) {
      await this.refreshHint();
    } else {
      this.events.onHint(null, "");
    }
  }

  private async refreshHint(): Promise<void> {
    if (!this.session) return;
    try {
      const hint = await this.api.hint(this.session.id);
      this.events.onHint(hint, "");
    } catch (error) {
      if (error instanceof ApiError && error.status === 413) {
        this.events.onHint(null, "position too large for exact hints");
        return;
      }
      throw error;
    }
  }
}
