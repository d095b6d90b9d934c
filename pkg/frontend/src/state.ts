// View state is always rebuilt from the server's session projection, so a
// refresh (or a conflict resync) can never disagree with the server.

import type { DoorName, Engine, SessionView } from './api.js';
import type { ChartBar } from './chart.js';

export const DOORS: DoorName[] = ['D1', 'D2', 'D3'];

export interface DoorView {
  door: DoorName;
  open: boolean;
  clickable: boolean;
  picked: boolean;
  hasPrize: boolean; // only ever true once revealed
}

export interface ViewState {
  engine: Engine;
  session: SessionView | null;
  pending: boolean; // one in-flight move at a time; inputs disabled meanwhile
  banner: string | null; // connectivity problems, with retry
  toast: string | null; // sync conflicts and rule violations
  chart: ChartBar[] | null;
}

export function initialState(engine: Engine): ViewState {
  return { engine, session: null, pending: false, banner: null, toast: null, chart: null };
}

export function fromProjection(state: ViewState, view: SessionView): ViewState {
  if (view.phase !== 'revealed' && view.prize !== undefined) {
    // the server must redact; refuse to render a leaky projection
    throw new Error('projection contains the prize before reveal');
  }
  return { ...state, session: view, pending: false, banner: null };
}

export function doorViews(state: ViewState): DoorView[] {
  const s = state.session;
  return DOORS.map((door) => {
    const open = s?.opened === door;
    const phase = s?.phase;
    const clickable =
      !state.pending && !open && phase === 'awaiting_first_pick';
    return {
      door,
      open,
      clickable,
      picked: s?.first === door || s?.final === door,
      hasPrize: s?.phase === 'revealed' && s.prize === door,
    };
  });
}

export function canChooseFinal(state: ViewState): boolean {
  return !state.pending && state.session?.phase === 'awaiting_final_pick';
}

export function statusLine(state: ViewState): string {
  const s = state.session;
  if (!s) return 'Pick an engine and start a game.';
  switch (s.phase) {
    case 'awaiting_first_pick':
      return 'Pick a door.';
    case 'awaiting_final_pick':
      return `The host opened door ${s.opened?.slice(1)}. Stick or switch?`;
    case 'revealed':
      return s.result === 'win'
        ? `You win! The prize was behind door ${s.prize?.slice(1)}.`
        : `You lose. The prize was behind door ${s.prize?.slice(1)}.`;
    default:
      return '';
  }
}
