/** Thin client for the walkrag service; talks to exactly four endpoints. */

import type { HealthResponse, MessageResponse, RouteView } from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly errorCode: string,
    message: string,
  ) {
    super(message);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const body = await response.json();
    if (!response.ok) {
      throw new ApiRequestError(
        response.status,
        body?.error_code ?? 'unknown',
        body?.message ?? response.statusText,
      );
    }
    return body as T;
  }

  health(): Promise<HealthResponse> {
    return this.request('/api/health');
  }

  async createSession(): Promise<string> {
    const body = await this.request<{ session_id: string }>('/api/sessions', {
      method: 'POST',
    });
    return body.session_id;
  }

  sendMessage(sessionId: string, utterance: string): Promise<MessageResponse> {
    return this.request(`/api/sessions/${sessionId}/messages`, {
      method: 'POST',
      headers: { 'content-type': 'application/json' },
      body: JSON.stringify({ utterance }),
    });
  }

  fetchRoute(sessionId: string): Promise<RouteView> {
    return this.request(`/api/sessions/${sessionId}/route`);
  }
}
