import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import type { FetchLike } from '../src/api.js';
import type { MessageResponse, RouteView } from '../src/types.js';

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, 'fixtures', name), 'utf-8')) as T;
}

export const spatialMessage = (): MessageResponse => fixture('message_spatial.json');
export const infoMessage = (): MessageResponse => fixture('message_info.json');
export const routeView = (): RouteView => fixture('route_view.json');

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { 'content-type': 'application/json' },
  });
}

export interface FakeServiceOptions {
  failMessages?: boolean;
  status502?: boolean;
}

/** fetch stand-in replaying the captured service bodies. */
export function fakeService(options: FakeServiceOptions = {}): {
  fetchFn: FetchLike;
  calls: string[];
} {
  const calls: string[] = [];
  const fetchFn: FetchLike = async (input, init) => {
    const url = new URL(input);
    calls.push(`${init?.method ?? 'GET'} ${url.pathname}`);
    if (url.pathname === '/api/health') {
      return jsonResponse({ status: 'ok', corpus_size: 44, graph_nodes: 51 });
    }
    if (url.pathname === '/api/sessions' && init?.method === 'POST') {
      return jsonResponse({ session_id: 'test-session-0123456789' }, 201);
    }
    if (url.pathname.endsWith('/messages')) {
      if (options.failMessages) {
        throw new TypeError('fetch failed');
      }
      if (options.status502) {
        return jsonResponse(
          { error_code: 'client_failure', message: 'please retry' },
          502,
        );
      }
      const body = JSON.parse(String(init?.body ?? '{}')) as { utterance: string };
      const wantsRoute = /\broute\b.*\bfrom\b/i.test(body.utterance);
      return jsonResponse(wantsRoute ? spatialMessage() : infoMessage());
    }
    if (url.pathname.endsWith('/route')) {
      return jsonResponse(routeView());
    }
    return jsonResponse({ error_code: 'unknown', message: 'no such path' }, 404);
  };
  return { fetchFn, calls };
}
