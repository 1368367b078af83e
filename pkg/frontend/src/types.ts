// Wire types for the authoring service's REST + WebSocket protocol.

export interface SceneObjectJson {
  id: string;
  assetType: string;
  position: number[];
  orientation: number[];
  size: number[];
  color: number[] | null;
  source: string;
  visible: boolean;
  isButton: boolean;
}

export interface ScriptBlockJson {
  blockId: string;
  sourceText: string;
}

export interface SceneSpecJson {
  schemaVersion: number;
  objects: SceneObjectJson[];
  scripts: ScriptBlockJson[];
  meta: Record<string, unknown>;
}

export interface DiagnosticJson {
  severity: string;
  code: string;
  message: string;
  span: { start: number; end: number } | null;
}

export interface CommandResponse {
  result: {
    command: Record<string, unknown>;
    provenance: string;
    resolvedUtterance: string;
  };
  spec: SceneSpecJson;
  debug: DiagnosticJson[];
}

export interface EventJson {
  tick: number;
  kind: string;
  payload: Record<string, unknown>;
}

export interface ObjectPoseJson {
  assetType: string;
  position: number[];
  orientation: number[];
  size: number[];
  color: number[] | null;
  visible: boolean;
  isButton: boolean;
}

export interface FrameJson {
  tick: number;
  playerPosition: number[];
  objectPoses: Record<string, ObjectPoseJson>;
  newEvents: EventJson[];
}

export interface ErrorBody {
  error: string;
  message: string;
  debug?: DiagnosticJson[];
}

export type Mode = "edit" | "play";

// The subset of the browser WebSocket surface the playground uses; lets
// tests substitute a Node implementation.
export interface PlaySocket {
  onopen: ((ev?: unknown) => void) | null;
  onmessage: ((ev: { data: unknown }) => void) | null;
  onclose: ((ev?: unknown) => void) | null;
  onerror: ((ev?: unknown) => void) | null;
  send(data: string): void;
  close(): void;
}

export type SocketFactory = (url: string) => PlaySocket;
