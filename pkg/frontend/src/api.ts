// Thin typed client over the authoring service. The playground never
// mutates state locally: every change goes through these calls and the
// response becomes the new mirror.

import type {
  CommandResponse,
  ErrorBody,
  Mode,
  SceneSpecJson,
  SocketFactory,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly body: ErrorBody,
  ) {
    super(body.message ?? body.error ?? `HTTP ${status}`);
  }
}

async function readJson(response: Response): Promise<unknown> {
  const text = await response.text();
  try {
    return text ? JSON.parse(text) : {};
  } catch {
    return { error: "bad-json", message: text };
  }
}

export class ApiClient {
  constructor(readonly base: string = "") {}

  private async request(path: string, init?: RequestInit): Promise<unknown> {
    const response = await fetch(this.base + path, init);
    const body = await readJson(response);
    if (!response.ok) {
      throw new ApiError(response.status, body as ErrorBody);
    }
    return body;
  }

  private post(path: string, payload?: unknown): Promise<unknown> {
    return this.request(path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload ?? {}),
    });
  }

  async createSession(): Promise<string> {
    const body = (await this.post("/sessions")) as { sessionId: string };
    return body.sessionId;
  }

  async getSession(id: string): Promise<{ sessionId: string; mode: Mode; spec: SceneSpecJson }> {
    return (await this.request(`/sessions/${id}`)) as {
      sessionId: string;
      mode: Mode;
      spec: SceneSpecJson;
    };
  }

  async getSpec(id: string): Promise<SceneSpecJson> {
    return (await this.request(`/sessions/${id}/spec`)) as SceneSpecJson;
  }

  async command(id: string, utterance: string, gazeTargets: string[]): Promise<CommandResponse> {
    return (await this.post(`/sessions/${id}/command`, {
      utterance,
      gazeTargets,
    })) as CommandResponse;
  }

  async setMode(id: string, mode: Mode): Promise<void> {
    await this.post(`/sessions/${id}/mode`, { mode });
  }

  async undo(id: string): Promise<boolean> {
    const body = (await this.post(`/sessions/${id}/undo`)) as { noop: boolean };
    return !body.noop;
  }

  async redo(id: string): Promise<boolean> {
    const body = (await this.post(`/sessions/${id}/redo`)) as { noop: boolean };
    return !body.noop;
  }

  async reset(id: string): Promise<void> {
    await this.post(`/sessions/${id}/reset`);
  }

  async save(id: string): Promise<string> {
    const body = (await this.post(`/sessions/${id}/save`)) as { savedId: string };
    return body.savedId;
  }

  async deleteBlock(id: string, blockId: string): Promise<void> {
    await this.request(`/sessions/${id}/scripts/${blockId}`, { method: "DELETE" });
  }

  playSocketUrl(id: string): string {
    let origin = this.base;
    if (origin === "" && typeof location !== "undefined") {
      origin = `${location.protocol}//${location.host}`;
    }
    return origin.replace(/^http/, "ws") + `/sessions/${id}/play`;
  }

  openPlaySocket(id: string, factory?: SocketFactory) {
    const url = this.playSocketUrl(id);
    if (factory) {
      return factory(url);
    }
    return new WebSocket(url);
  }
}
