// DOM wiring: render the controller's state, forward clicks to it.

import { GameApi } from './api.js';
import type { DoorName, Engine } from './api.js';
import { GameController } from './controller.js';
import { canChooseFinal, doorViews, statusLine } from './state.js';

const api = new GameApi('');
const controller = new GameController(api);

const el = (id: string) => document.getElementById(id)!;

function render(): void {
  const state = controller.state;
  const doors = doorViews(state);
  const board = el('board');
  board.innerHTML = '';
  for (const d of doors) {
    const btn = document.createElement('button');
    btn.className = 'door' + (d.open ? ' open' : '') + (d.picked ? ' picked' : '');
    btn.disabled = !d.clickable;
    btn.dataset.door = d.door;
    btn.innerHTML = d.open
      ? '<span class="goat">open</span>'
      : `<span class="num">${d.door.slice(1)}</span>` +
        (d.hasPrize ? '<span class="prize">&#127942;</span>' : '');
    btn.addEventListener('click', () => {
      void controller.clickDoor(d.door as DoorName).then(render);
    });
    board.appendChild(btn);
  }

  el('status').textContent = statusLine(state);
  el('engine-badge').textContent =
    state.engine === 'classical' ? '' : 'quantum verdict: ' + state.engine;

  const finals = el('finals');
  finals.style.display = canChooseFinal(state) ? '' : 'none';

  const banner = el('banner');
  banner.style.display = state.banner ? '' : 'none';
  banner.querySelector('.msg')!.textContent = state.banner ?? '';

  const toast = el('toast');
  toast.style.display = state.toast ? '' : 'none';
  toast.textContent = state.toast ?? '';

  const chart = el('chart');
  chart.style.display = state.chart ? '' : 'none';
  if (state.chart) {
    chart.innerHTML = '<h3>Final-register amplitudes</h3>';
    for (const bar of state.chart) {
      const row = document.createElement('div');
      row.className = 'bar-row';
      row.innerHTML =
        `<span class="bar-label">${bar.door} ${bar.label}</span>` +
        `<div class="bar"><div class="fill" style="width:${bar.percent}%"></div></div>` +
        `<span class="bar-value">${bar.probability.toFixed(3)}</span>`;
      chart.appendChild(row);
    }
  }
}

function start(): void {
  const engine = (el('engine') as HTMLSelectElement).value as Engine;
  void controller.start(engine).then(render);
}

el('start').addEventListener('click', start);
el('retry').addEventListener('click', () => void controller.retry().then(render));
for (const choice of ['stick', 'switch'] as const) {
  el(choice).addEventListener('click', () => {
    void controller.chooseFinal(choice).then(render);
  });
}

render();
