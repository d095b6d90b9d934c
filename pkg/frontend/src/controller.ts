// Drives a game against the service: optimistic input locking, authoritative
// re-render from every response, resync on conflicts. No game rule lives
// here -- outcomes are whatever the server says.

import { ApiError, GameApi } from './api.js';
import type { DoorName, Engine } from './api.js';
import { barsAreNormalized, toBars } from './chart.js';
import { fromProjection, initialState } from './state.js';
import type { ViewState } from './state.js';

export class GameController {
  state: ViewState;

  constructor(
    private api: GameApi,
    engine: Engine = 'classical',
  ) {
    this.state = initialState(engine);
  }

  async start(engine: Engine): Promise<ViewState> {
    this.state = { ...initialState(engine), pending: true };
    try {
      const view = await this.api.createSession(engine);
      this.state = fromProjection(this.state, view);
    } catch (err) {
      this.state = { ...this.state, pending: false, banner: bannerText(err) };
    }
    return this.state;
  }

  async clickDoor(door: DoorName): Promise<ViewState> {
    const s = this.state.session;
    if (!s || this.state.pending || s.phase !== 'awaiting_first_pick' || s.opened === door) {
      return this.state;
    }
    return this.move(() => this.api.pickFirst(s.id, door));
  }

  async chooseFinal(choice: 'stick' | 'switch'): Promise<ViewState> {
    const s = this.state.session;
    if (!s || this.state.pending || s.phase !== 'awaiting_final_pick') {
      return this.state;
    }
    const next = await this.move(() => this.api.pickFinal(s.id, choice));
    if (next.session?.phase === 'revealed' && next.session.engine === 'scheme1') {
      await this.loadChart(next.session.id);
    }
    return this.state;
  }

  async retry(): Promise<ViewState> {
    const s = this.state.session;
    this.state = { ...this.state, banner: null };
    if (s) {
      await this.resync(s.id);
    }
    return this.state;
  }

  private async move(call: () => Promise<import('./api.js').SessionView>): Promise<ViewState> {
    this.state = { ...this.state, pending: true, toast: null };
    try {
      this.state = fromProjection(this.state, await call());
    } catch (err) {
      if (err instanceof ApiError && (err.status === 409 || err.status === 422)) {
        // out of step with the server: fetch the truth and tell the player
        const id = this.state.session?.id;
        if (id) await this.resync(id);
        this.state = { ...this.state, pending: false, toast: err.message };
      } else {
        this.state = { ...this.state, pending: false, banner: bannerText(err) };
      }
    }
    return this.state;
  }

  private async resync(id: string): Promise<void> {
    try {
      this.state = fromProjection(this.state, await this.api.getSession(id));
    } catch (err) {
      this.state = { ...this.state, pending: false, banner: bannerText(err) };
    }
  }

  private async loadChart(id: string): Promise<void> {
    try {
      const { amplitudes } = await this.api.amplitudes(id);
      const bars = toBars(amplitudes);
      if (!barsAreNormalized(bars)) {
        throw new Error('amplitude probabilities do not sum to 1');
      }
      this.state = { ...this.state, chart: bars };
    } catch (err) {
      this.state = { ...this.state, toast: bannerText(err) };
    }
  }
}

function bannerText(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}
