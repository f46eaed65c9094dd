// Thin typed client for the workbench API.  Mutating calls are queued so at
// most one is in flight at a time.

import {
  ApiError,
  HintPayload,
  SessionPayload,
  SessionState,
  TryGroupPayload,
} from "./types.js";

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail =
      typeof body === "object" && body !== null && "detail" in body
        ? String((body as { detail: unknown }).detail)
        : response.statusText;
    throw new ApiError(response.status, detail);
  }
  return body as T;
}

export class WorkbenchClient {
  private queue: Promise<unknown> = Promise.resolve();

  constructor(readonly baseUrl: string) {}

  private mutate<T>(run: () => Promise<T>): Promise<T> {
    const next = this.queue.then(run, run);
    this.queue = next.catch(() => undefined);
    return next;
  }

  health(): Promise<{ ok: boolean }> {
    return request(`${this.baseUrl}/healthz`);
  }

  createSession(body: { benchmark?: string; ppla?: string }): Promise<SessionPayload> {
    return this.mutate(() =>
      request<SessionPayload>(`${this.baseUrl}/sessions`, {
        method: "POST",
        body: JSON.stringify(body),
      }),
    );
  }

  tryGroup(sessionId: string, cubes: string[]): Promise<TryGroupPayload> {
    return this.mutate(() =>
      request<TryGroupPayload>(`${this.baseUrl}/sessions/${sessionId}/try-group`, {
        method: "POST",
        body: JSON.stringify({ cubes }),
      }),
    );
  }

  accept(sessionId: string, candidateId: string): Promise<SessionState> {
    return this.mutate(() =>
      request<SessionState>(`${this.baseUrl}/sessions/${sessionId}/accept`, {
        method: "POST",
        body: JSON.stringify({ candidate_id: candidateId }),
      }),
    );
  }

  undo(sessionId: string): Promise<SessionState> {
    return this.mutate(() =>
      request<SessionState>(`${this.baseUrl}/sessions/${sessionId}/undo`, {
        method: "POST",
      }),
    );
  }

  hint(sessionId: string): Promise<HintPayload> {
    return request(`${this.baseUrl}/sessions/${sessionId}/hint`);
  }
}
