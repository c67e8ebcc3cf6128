/** Chat view state: ordered messages, one in-flight request, retry banner,
 * and the POI-click prefill gesture. All transitions are synchronous and
 * pure-ish so they can be unit tested without a DOM. */

import { ApiClient, ApiRequestError } from './api.js';
import type { MessageResponse, RouteView } from './types.js';

export interface ChatMessage {
  role: 'user' | 'assistant';
  text: string;
  timestamp: number;
  passageCount?: number;
}

export interface SendOutcome {
  response: MessageResponse;
  route: RouteView | null;
}

export class ChatViewState {
  sessionId = '';
  messages: ChatMessage[] = [];
  pending = false;
  retryBanner = false;
  inputDraft = '';
  route: RouteView | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly now: () => number = () => Date.now(),
  ) {}

  async start(): Promise<void> {
    this.sessionId = await this.api.createSession();
  }

  /** POST the utterance; on spatial answers also refresh the route view.
   * Only one request may be in flight; a second call while pending is
   * rejected synchronously. Network failures raise the retry banner and
   * keep the utterance in the input draft. */
  async sendMessage(text: string): Promise<SendOutcome> {
    const utterance = text.trim();
    if (!utterance) {
      throw new Error('refusing to send an empty message');
    }
    if (this.pending) {
      throw new Error('a request is already in flight');
    }
    this.pending = true;
    this.retryBanner = false;
    const userMessage: ChatMessage = { role: 'user', text: utterance, timestamp: this.now() };
    this.messages.push(userMessage);

    try {
      const response = await this.api.sendMessage(this.sessionId, utterance);
      let route: RouteView | null = null;
      if (response.intent_kind === 'spatial' && response.payload) {
        route = await this.api.fetchRoute(this.sessionId);
        this.route = route;
      }
      this.messages.push({
        role: 'assistant',
        text: response.answer,
        timestamp: this.now(),
        passageCount: response.passages?.length,
      });
      this.inputDraft = '';
      return { response, route };
    } catch (err) {
      // 5xx and transport failures are retryable: keep the text, show the
      // banner, and roll the optimistic user message back off the list
      this.messages.pop();
      this.retryBanner = true;
      this.inputDraft = utterance;
      throw err instanceof ApiRequestError ? err : new Error(String(err));
    } finally {
      this.pending = false;
    }
  }

  /** POI marker click: prefill a follow-up; the user confirms before sending. */
  clickPoi(name: string): void {
    this.inputDraft = `Tell me more about ${name}`;
  }

  dismissPrefill(): void {
    this.inputDraft = '';
  }
}
