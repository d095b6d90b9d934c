// Typed client for the game service. All game outcomes come from the server;
// this module only moves JSON.

export type Engine = 'classical' | 'scheme1' | 'scheme2';
export type DoorName = 'D1' | 'D2' | 'D3';
export type Phase =
  | 'awaiting_first_pick'
  | 'host_opened'
  | 'awaiting_final_pick'
  | 'revealed';

export interface SessionView {
  schema: number;
  id: string;
  phase: Phase;
  engine: Engine;
  first: DoorName | null;
  opened: DoorName | null;
  final?: DoorName;
  result?: 'win' | 'lose';
  prize?: DoorName;
  transcript: Array<Record<string, unknown>>;
}

export interface AmplitudeRow {
  state: string;
  door: DoorName | null;
  re: number;
  im: number;
  probability: number;
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  let res: Response;
  try {
    res = await fetch(`${base}${path}`, init);
  } catch (err) {
    throw new ApiError(0, 'network', `service unreachable: ${err}`);
  }
  const body = await res.json().catch(() => ({}));
  if (!res.ok) {
    throw new ApiError(res.status, body.code ?? 'internal', body.message ?? res.statusText);
  }
  return body as T;
}

function post<T>(base: string, path: string, payload: unknown): Promise<T> {
  return request<T>(base, path, {
    method: 'POST',
    headers: { 'Content-Type': 'application/json' },
    body: JSON.stringify(payload),
  });
}

export class GameApi {
  constructor(private base = '') {}

  health(): Promise<{ status: string }> {
    return request(this.base, '/health');
  }

  createSession(engine: Engine, seed?: number): Promise<SessionView> {
    return post(this.base, '/sessions', seed === undefined ? { engine } : { engine, seed });
  }

  getSession(id: string): Promise<SessionView> {
    return request(this.base, `/sessions/${id}`);
  }

  pickFirst(id: string, door: DoorName): Promise<SessionView> {
    return post(this.base, `/sessions/${id}/move`, { action: 'first_pick', door });
  }

  pickFinal(id: string, choice: 'stick' | 'switch'): Promise<SessionView> {
    return post(this.base, `/sessions/${id}/move`, { action: 'final_pick', choice });
  }

  amplitudes(id: string): Promise<{ id: string; amplitudes: AmplitudeRow[] }> {
    return request(this.base, `/sessions/${id}/amplitudes`);
  }
}
