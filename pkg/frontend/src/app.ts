/** DOM wiring: binds ChatViewState, the canvas map, and the walkability
 * panel to the page. Everything observable in the UI comes straight from
 * service response bodies — no place name is ever invented client-side. */

import { ApiClient, ApiRequestError } from './api.js';
import { computeMapModel, drawMap, hitTestMarker, type MapModel } from './map.js';
import { computePanelModel } from './panel.js';
import { ChatViewState } from './state.js';
import type { RouteView } from './types.js';

export interface AppElements {
  chatLog: HTMLElement;
  input: HTMLInputElement;
  sendButton: HTMLButtonElement;
  retryBanner: HTMLElement;
  canvas: HTMLCanvasElement;
  panel: HTMLElement;
  status: HTMLElement;
}

export class App {
  readonly state: ChatViewState;
  private mapModel: MapModel | null = null;

  constructor(
    private readonly elements: AppElements,
    api: ApiClient,
  ) {
    this.state = new ChatViewState(api);
    elements.sendButton.addEventListener('click', () => void this.submit());
    elements.input.addEventListener('keydown', (event) => {
      if ((event as KeyboardEvent).key === 'Enter') {
        void this.submit();
      }
      if ((event as KeyboardEvent).key === 'Escape') {
        this.state.dismissPrefill();
        this.syncInput();
      }
    });
    elements.canvas.addEventListener('click', (event) => {
      if (!this.mapModel) return;
      const rect = elements.canvas.getBoundingClientRect();
      const marker = hitTestMarker(
        this.mapModel,
        (event as MouseEvent).clientX - rect.left,
        (event as MouseEvent).clientY - rect.top,
      );
      if (marker) {
        this.state.clickPoi(marker.name);
        this.syncInput();
        elements.input.focus();
      }
    });
  }

  async start(): Promise<void> {
    await this.state.start();
    this.elements.status.textContent = `session ${this.state.sessionId.slice(0, 8)}…`;
  }

  async submit(): Promise<void> {
    const text = this.elements.input.value;
    if (!text.trim() || this.state.pending) {
      return;
    }
    this.renderPendingFlag(true);
    try {
      const outcome = await this.state.sendMessage(text);
      if (outcome.route) {
        this.renderRoute(outcome.route);
      }
    } catch (err) {
      if (!(err instanceof ApiRequestError) || err.status >= 500) {
        // transport failure or 5xx: banner is already raised by the state
      } else {
        this.appendSystemNote(err.message);
      }
    } finally {
      this.renderPendingFlag(false);
      this.renderMessages();
      this.syncInput();
      this.elements.retryBanner.hidden = !this.state.retryBanner;
    }
  }

  renderRoute(view: RouteView): void {
    const { canvas, panel } = this.elements;
    this.mapModel = computeMapModel(view, canvas.width, canvas.height);
    const ctx = canvas.getContext('2d');
    if (ctx) {
      drawMap(ctx, this.mapModel);
    }
    const model = computePanelModel(view.payload);
    panel.innerHTML = '';
    const gauge = document.createElement('div');
    gauge.className = 'ws-gauge';
    gauge.textContent = `walkability ${model.wsPercent}%`;
    panel.appendChild(gauge);
    for (const bar of model.bars) {
      const row = document.createElement('div');
      row.className = 'indicator-row';
      const label = document.createElement('span');
      label.textContent = `${bar.kind} (w ${bar.w})`;
      const track = document.createElement('div');
      track.className = 'bar-track';
      const fill = document.createElement('div');
      fill.className = 'bar-fill';
      fill.style.width = `${Math.round(bar.fill * 100)}%`;
      fill.title = `c = ${bar.c}`;
      track.appendChild(fill);
      row.appendChild(label);
      row.appendChild(track);
      panel.appendChild(row);
    }
    const total = document.createElement('div');
    total.className = 'weight-total';
    total.textContent = `weights sum: ${model.weightTotalLabel}`;
    panel.appendChild(total);
  }

  renderMessages(): void {
    const log = this.elements.chatLog;
    log.innerHTML = '';
    for (const message of this.state.messages) {
      const bubble = document.createElement('div');
      bubble.className = `bubble ${message.role}`;
      bubble.textContent = message.text;
      if (message.passageCount !== undefined) {
        const badge = document.createElement('span');
        badge.className = 'passage-badge';
        badge.textContent = `${message.passageCount} passages`;
        bubble.appendChild(badge);
      }
      log.appendChild(bubble);
    }
    log.scrollTop = log.scrollHeight;
  }

  private appendSystemNote(text: string): void {
    const note = document.createElement('div');
    note.className = 'bubble system';
    note.textContent = text;
    this.elements.chatLog.appendChild(note);
  }

  private renderPendingFlag(pending: boolean): void {
    this.elements.sendButton.disabled = pending;
    this.elements.input.classList.toggle('pending', pending);
  }

  private syncInput(): void {
    this.elements.input.value = this.state.inputDraft;
  }
}

export function mount(baseUrl: string): App {
  const byId = <T extends HTMLElement>(id: string): T => {
    const el = document.getElementById(id);
    if (!el) throw new Error(`missing #${id}`);
    return el as T;
  };
  const app = new App(
    {
      chatLog: byId('chat-log'),
      input: byId<HTMLInputElement>('chat-input'),
      sendButton: byId<HTMLButtonElement>('send-button'),
      retryBanner: byId('retry-banner'),
      canvas: byId<HTMLCanvasElement>('map-canvas'),
      panel: byId('walkability-panel'),
      status: byId('status-line'),
    },
    new ApiClient(baseUrl),
  );
  void app.start();
  return app;
}
