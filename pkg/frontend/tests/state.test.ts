import { describe, expect, it } from 'vitest';

import { ApiClient } from '../src/api.js';
import { ChatViewState } from '../src/state.js';
import { fakeService } from './helpers.js';

function makeState(options = {}) {
  const service = fakeService(options);
  const api = new ApiClient('http://fake', service.fetchFn);
  let tick = 0;
  const state = new ChatViewState(api, () => ++tick);
  return { state, service };
}

describe('ChatViewState', () => {
  it('starts a session and keeps messages strictly ordered', async () => {
    const { state } = makeState();
    await state.start();
    expect(state.sessionId).toBe('test-session-0123456789');

    await state.sendMessage('Tell me more about the Glass Museum');
    await state.sendMessage('What happens at Market Square?');
    expect(state.messages.map((m) => m.role)).toEqual([
      'user',
      'assistant',
      'user',
      'assistant',
    ]);
    const stamps = state.messages.map((m) => m.timestamp);
    expect([...stamps].sort((a, b) => a - b)).toEqual(stamps);
  });

  it('spatial answers also refresh the route view', async () => {
    const { state, service } = makeState();
    await state.start();
    const outcome = await state.sendMessage('I want a route from North Gate to the Glass Museum');
    expect(outcome.response.intent_kind).toBe('spatial');
    expect(outcome.route).not.toBeNull();
    expect(state.route).not.toBeNull();
    expect(service.calls).toContain('GET /api/sessions/test-session-0123456789/route');
  });

  it('information answers leave the map alone', async () => {
    const { state, service } = makeState();
    await state.start();
    await state.sendMessage('Tell me more about the Glass Museum');
    expect(state.route).toBeNull();
    expect(service.calls.filter((c) => c.includes('/route'))).toHaveLength(0);
  });

  it('allows only one in-flight request', async () => {
    const { state } = makeState();
    await state.start();
    const first = state.sendMessage('Tell me about the Old Mill');
    await expect(state.sendMessage('second while pending')).rejects.toThrow(/in flight/);
    await first;
    expect(state.messages).toHaveLength(2); // the rejected call never landed
  });

  it('network failure raises the retry banner and preserves the draft', async () => {
    const { state } = makeState({ failMessages: true });
    await state.start();
    await expect(state.sendMessage('Tell me about the Old Mill')).rejects.toThrow();
    expect(state.retryBanner).toBe(true);
    expect(state.inputDraft).toBe('Tell me about the Old Mill');
    expect(state.messages).toHaveLength(0); // history unchanged
    expect(state.pending).toBe(false);
  });

  it('a 502 behaves like a retryable failure', async () => {
    const { state } = makeState({ status502: true });
    await state.start();
    await expect(state.sendMessage('Tell me about the Old Mill')).rejects.toMatchObject({
      status: 502,
      errorCode: 'client_failure',
    });
    expect(state.retryBanner).toBe(true);
    expect(state.messages).toHaveLength(0);
  });

  it('poi click prefills the canonical follow-up', async () => {
    const { state } = makeState();
    state.clickPoi('Champs de Mars');
    expect(state.inputDraft).toBe('Tell me more about Champs de Mars');
  });

  it('dismiss clears the prefill and a second click replaces the first', () => {
    const { state } = makeState();
    state.clickPoi('Glass Museum');
    state.clickPoi('Clock Tower');
    expect(state.inputDraft).toBe('Tell me more about Clock Tower');
    state.dismissPrefill();
    expect(state.inputDraft).toBe('');
  });

  it('refuses empty messages', async () => {
    const { state } = makeState();
    await state.start();
    await expect(state.sendMessage('   ')).rejects.toThrow(/empty/);
  });
});
