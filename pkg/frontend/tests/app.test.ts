// @vitest-environment happy-dom
import { beforeEach, describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { App, type AppElements } from '../src/app.js';
import { fakeService, routeView, spatialMessage } from './helpers.js';

function mountDom(): AppElements {
  document.body.innerHTML = `
    <div id="chat-log"></div>
    <input id="chat-input" />
    <button id="send-button"></button>
    <div id="retry-banner" hidden></div>
    <canvas id="map-canvas" width="720" height="520"></canvas>
    <div id="walkability-panel"></div>
    <div id="status-line"></div>
  `;
  return {
    chatLog: document.getElementById('chat-log')!,
    input: document.getElementById('chat-input') as HTMLInputElement,
    sendButton: document.getElementById('send-button') as HTMLButtonElement,
    retryBanner: document.getElementById('retry-banner')!,
    canvas: document.getElementById('map-canvas') as HTMLCanvasElement,
    panel: document.getElementById('walkability-panel')!,
    status: document.getElementById('status-line')!,
  };
}

describe('App DOM wiring', () => {
  let elements: AppElements;

  beforeEach(() => {
    elements = mountDom();
  });

  it('appends an answer bubble for an information query, with passage badge', async () => {
    const app = new App(elements, new ApiClient('http://fake', fakeService().fetchFn));
    await app.start();
    elements.input.value = 'Tell me more about the Glass Museum';
    await app.submit();
    const bubbles = elements.chatLog.querySelectorAll('.bubble');
    expect(bubbles).toHaveLength(2);
    expect(bubbles[1].className).toContain('assistant');
    expect(elements.chatLog.querySelector('.passage-badge')!.textContent).toBe('3 passages');
  });

  it('renders the walkability panel after a spatial query', async () => {
    const app = new App(elements, new ApiClient('http://fake', fakeService().fetchFn));
    await app.start();
    elements.input.value = 'I want a route from North Gate to the Glass Museum';
    await app.submit();
    expect(elements.panel.querySelectorAll('.indicator-row')).toHaveLength(4);
    expect(elements.panel.querySelector('.weight-total')!.textContent).toContain('1.0');
    expect(elements.panel.querySelector('.ws-gauge')!.textContent).toContain('44%');
  });

  it('shows the retry banner and keeps the draft on transport failure', async () => {
    const app = new App(
      elements,
      new ApiClient('http://fake', fakeService({ failMessages: true }).fetchFn),
    );
    await app.start();
    elements.input.value = 'Tell me about the Old Mill';
    await app.submit();
    expect(elements.retryBanner.hidden).toBe(false);
    expect(elements.input.value).toBe('Tell me about the Old Mill');
    expect(elements.chatLog.querySelectorAll('.bubble')).toHaveLength(0);
  });

  it('never displays a place name absent from the service bodies', async () => {
    const app = new App(elements, new ApiClient('http://fake', fakeService().fetchFn));
    await app.start();
    elements.input.value = 'I want a route from North Gate to the Glass Museum';
    await app.submit();

    const served =
      JSON.stringify(spatialMessage()) + JSON.stringify(routeView());
    const visible = document.body.textContent ?? '';
    const names = visible.match(/[A-Z][a-z]+(?: [A-Z][a-z]+)+/g) ?? [];
    for (const name of names) {
      expect(served).toContain(name);
    }
  });
});
