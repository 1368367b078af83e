// The playground application: command box, menu, debugger panel, script
// block list, scene canvas, and the WebSocket play loop.
//
// The server owns all state. Every mutation is a request, and the spec
// mirror is replaced by what comes back; a full page reload with the same
// session id reproduces the identical canvas from GET /spec.

import { ApiClient, ApiError } from "./api.js";
import { SceneCanvas, drawableFromSpecObject } from "./canvas.js";
import type {
  DiagnosticJson,
  EventJson,
  FrameJson,
  Mode,
  PlaySocket,
  SceneSpecJson,
  SocketFactory,
} from "./types.js";

const DT_MS = 1000 / 60;
const PLAYER_SPEED = 3.0; // units/second of WASD motion
const TRACE_TAIL = 50;

export interface PlaygroundOptions {
  base?: string;
  sessionId?: string;
  socketFactory?: SocketFactory;
  tickMs?: number;
}

interface UiState {
  sessionId: string;
  spec: SceneSpecJson;
  mode: Mode;
  gazeSelection: string[];
  traceTail: EventJson[];
}

export class Playground {
  readonly api: ApiClient;
  readonly root: HTMLElement;
  state!: UiState;

  private doc: Document;
  private canvas!: SceneCanvas;
  private input!: HTMLInputElement;
  private gazeLabel!: HTMLElement;
  private modeButton!: HTMLButtonElement;
  private debugList!: HTMLElement;
  private scriptList!: HTMLElement;
  private toasts!: HTMLElement;
  private statusLine!: HTMLElement;
  private socket: PlaySocket | null = null;
  private ticker: ReturnType<typeof setInterval> | null = null;
  private held = new Set<string>();
  private pendingPress: string | null = null;
  private lastFrame: FrameJson | null = null;
  private socketFactory?: SocketFactory;
  private tickMs: number;

  constructor(root: HTMLElement, options: PlaygroundOptions = {}) {
    this.root = root;
    this.doc = root.ownerDocument;
    this.api = new ApiClient(options.base ?? "");
    this.socketFactory = options.socketFactory;
    this.tickMs = options.tickMs ?? DT_MS;
  }

  async start(sessionId?: string): Promise<void> {
    const id = sessionId ?? (await this.api.createSession());
    const session = await this.api.getSession(id);
    this.state = {
      sessionId: id,
      spec: session.spec,
      mode: session.mode,
      gazeSelection: [],
      traceTail: [],
    };
    this.buildDom();
    this.renderAll();
    this.log("info", `session ${id}`);
  }

  // -- DOM ------------------------------------------------------------------

  private buildDom(): void {
    const doc = this.doc;
    this.root.innerHTML = "";

    const grid = doc.createElement("div");
    grid.className = "playground";

    // command box
    const commandPanel = panel(doc, "command-panel", "Type Command");
    this.input = doc.createElement("input");
    this.input.type = "text";
    this.input.id = "command-input";
    this.input.placeholder = 'e.g. "create a cherry"';
    this.input.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Enter") {
        void this.submitCommand();
      }
    });
    const submit = button(doc, "submit-command", "Submit", () => void this.submitCommand());
    this.gazeLabel = doc.createElement("div");
    this.gazeLabel.id = "gaze-label";
    commandPanel.append(this.input, submit, this.gazeLabel);

    // menu
    const menu = panel(doc, "menu-panel", "Menu");
    this.modeButton = button(doc, "toggle-mode", "Enter play mode", () => void this.toggleMode());
    const row1 = row(doc, this.modeButton);
    const row2 = row(
      doc,
      button(doc, "undo", "Undo", () => void this.undo()),
      button(doc, "redo", "Redo", () => void this.redo()),
    );
    const row3 = row(
      doc,
      button(doc, "toggle-debugger", "Toggle debugger", () => togglePanel(this.debugList)),
      button(doc, "toggle-scripts", "Toggle scripts", () => togglePanel(this.scriptList)),
    );
    const row4 = row(
      doc,
      button(doc, "reset", "Reset", () => void this.reset()),
      button(doc, "save", "Save", () => void this.save()),
    );
    menu.append(row1, row2, row3, row4);

    // debugger
    const debugPanel = panel(doc, "debug-panel", "Debugger");
    this.debugList = doc.createElement("ul");
    this.debugList.id = "debug-log";
    debugPanel.appendChild(this.debugList);

    // scripts
    const scriptsPanel = panel(doc, "scripts-panel", "AtomScript");
    this.scriptList = doc.createElement("div");
    this.scriptList.id = "script-blocks";
    scriptsPanel.appendChild(this.scriptList);

    // canvas + toasts + status
    const canvasPanel = panel(doc, "canvas-panel", "Scene");
    this.canvas = new SceneCanvas(doc, (id) => this.onObjectClick(id));
    this.toasts = doc.createElement("div");
    this.toasts.id = "toasts";
    this.statusLine = doc.createElement("div");
    this.statusLine.id = "status-line";
    canvasPanel.append(this.canvas.element, this.toasts, this.statusLine);

    grid.append(commandPanel, menu, canvasPanel, debugPanel, scriptsPanel);
    this.root.appendChild(grid);

    const view = this.doc.defaultView;
    if (view) {
      view.addEventListener("keydown", (event) => this.onKey(event as KeyboardEvent, true));
      view.addEventListener("keyup", (event) => this.onKey(event as KeyboardEvent, false));
    }
  }

  // -- actions ----------------------------------------------------------------

  async submitCommand(): Promise<void> {
    const utterance = this.input.value.trim();
    if (!utterance) {
      return;
    }
    const gaze = [...this.state.gazeSelection];
    try {
      const response = await this.api.command(this.state.sessionId, utterance, gaze);
      this.state.spec = response.spec;
      this.input.value = "";
      this.log("ok", `[${response.result.provenance}] ${JSON.stringify(response.result.command)}`);
      for (const diagnostic of response.debug) {
        this.logDiagnostic(diagnostic);
      }
    } catch (error) {
      this.logError(error);
    } finally {
      // gaze selection is one-shot: it applies to a single utterance
      this.state.gazeSelection = [];
      this.renderAll();
    }
  }

  async toggleMode(): Promise<void> {
    if (this.state.mode === "edit") {
      try {
        await this.api.setMode(this.state.sessionId, "play");
      } catch (error) {
        this.logError(error);
        return;
      }
      this.state.mode = "play";
      this.openPlayLoop();
    } else {
      this.closePlayLoop();
      try {
        await this.api.setMode(this.state.sessionId, "edit");
        this.state.spec = await this.api.getSpec(this.state.sessionId);
      } catch (error) {
        this.logError(error);
      }
      this.state.mode = "edit";
      this.lastFrame = null;
    }
    this.renderAll();
  }

  async undo(): Promise<void> {
    try {
      const did = await this.api.undo(this.state.sessionId);
      this.log("info", did ? "undone" : "nothing to undo");
      this.state.spec = await this.api.getSpec(this.state.sessionId);
    } catch (error) {
      this.logError(error);
    }
    this.renderAll();
  }

  async redo(): Promise<void> {
    try {
      const did = await this.api.redo(this.state.sessionId);
      this.log("info", did ? "redone" : "nothing to redo");
      this.state.spec = await this.api.getSpec(this.state.sessionId);
    } catch (error) {
      this.logError(error);
    }
    this.renderAll();
  }

  async reset(): Promise<void> {
    try {
      await this.api.reset(this.state.sessionId);
      this.state.spec = await this.api.getSpec(this.state.sessionId);
      this.log("info", "scene reset");
    } catch (error) {
      this.logError(error);
    }
    this.renderAll();
  }

  async save(): Promise<void> {
    try {
      const savedId = await this.api.save(this.state.sessionId);
      this.log("ok", `saved as ${savedId}`);
    } catch (error) {
      this.logError(error);
    }
  }

  async deleteBlock(blockId: string): Promise<void> {
    try {
      await this.api.deleteBlock(this.state.sessionId, blockId);
      this.state.spec = await this.api.getSpec(this.state.sessionId);
      this.log("info", `deleted ${blockId}`);
    } catch (error) {
      this.logError(error);
    }
    this.renderAll();
  }

  private onObjectClick(id: string): void {
    if (this.state.mode === "play") {
      this.pendingPress = id; // pressing buttons is a play-mode interaction
      return;
    }
    const selection = this.state.gazeSelection;
    const index = selection.indexOf(id);
    if (index >= 0) {
      selection.splice(index, 1);
    } else {
      selection.push(id);
    }
    this.renderAll();
  }

  // -- play loop ----------------------------------------------------------------

  private openPlayLoop(): void {
    const socket = this.api.openPlaySocket(
      this.state.sessionId,
      this.socketFactory,
    ) as PlaySocket;
    this.socket = socket;
    socket.onmessage = (event) => {
      const frame = JSON.parse(String(event.data)) as FrameJson | { error: string };
      if ("error" in frame) {
        this.log("error", `play: ${frame.error}`);
        return;
      }
      this.lastFrame = frame;
      for (const item of frame.newEvents) {
        this.state.traceTail.push(item);
        if (item.kind === "soundPlayed") {
          this.toast(String(item.payload["sound"] ?? "?"));
        }
      }
      if (this.state.traceTail.length > TRACE_TAIL) {
        this.state.traceTail.splice(0, this.state.traceTail.length - TRACE_TAIL);
      }
      this.renderAll();
    };
    socket.onopen = () => {
      this.ticker = setInterval(() => this.sendTick(), this.tickMs);
    };
    socket.onclose = () => {
      if (this.ticker !== null) {
        clearInterval(this.ticker);
        this.ticker = null;
      }
    };
    socket.onerror = () => this.log("error", "play socket error");
  }

  private closePlayLoop(): void {
    if (this.ticker !== null) {
      clearInterval(this.ticker);
      this.ticker = null;
    }
    if (this.socket) {
      this.socket.close();
      this.socket = null;
    }
  }

  private sendTick(): void {
    if (!this.socket) {
      return;
    }
    const step = PLAYER_SPEED * (this.tickMs / 1000);
    let dx = 0;
    let dz = 0;
    if (this.held.has("w") || this.held.has("arrowup")) dz += step;
    if (this.held.has("s") || this.held.has("arrowdown")) dz -= step;
    if (this.held.has("a") || this.held.has("arrowleft")) dx -= step;
    if (this.held.has("d") || this.held.has("arrowright")) dx += step;
    const message: Record<string, unknown> = { dx, dy: 0, dz };
    if (this.pendingPress !== null) {
      message["press"] = this.pendingPress;
      this.pendingPress = null;
    }
    this.socket.send(JSON.stringify(message));
  }

  private onKey(event: KeyboardEvent, down: boolean): void {
    const key = event.key?.toLowerCase();
    if (!key) {
      return;
    }
    const target = event.target as HTMLElement | null;
    if (target && target.tagName === "INPUT") {
      return; // typing a command, not steering
    }
    if (down) {
      this.held.add(key);
    } else {
      this.held.delete(key);
    }
  }

  // -- rendering ----------------------------------------------------------------

  renderAll(): void {
    const inPlay = this.state.mode === "play" && this.lastFrame !== null;
    const objects = inPlay
      ? Object.entries(this.lastFrame!.objectPoses).map(([id, pose]) => ({
          id,
          assetType: pose.assetType,
          position: pose.position,
          size: pose.size,
          color: pose.color,
          visible: pose.visible,
          isButton: pose.isButton,
        }))
      : this.state.spec.objects.map(drawableFromSpecObject);
    const playerPosition = inPlay ? this.lastFrame!.playerPosition : [0, 0, 0];
    this.canvas.render(objects, playerPosition, this.state.gazeSelection);

    this.modeButton.textContent =
      this.state.mode === "edit" ? "Enter play mode" : "Back to edit mode";
    this.root
      .querySelector(".playground")
      ?.setAttribute("data-mode", this.state.mode);

    this.gazeLabel.textContent = this.state.gazeSelection.length
      ? `gazing at: ${this.state.gazeSelection.join(", ")}`
      : "click objects to gaze at them";

    this.renderScripts();
    this.statusLine.textContent = inPlay
      ? `play · tick ${this.lastFrame!.tick}`
      : `edit · ${this.state.spec.objects.length} objects, ${this.state.spec.scripts.length} scripts`;
  }

  private renderScripts(): void {
    this.scriptList.innerHTML = "";
    for (const block of this.state.spec.scripts) {
      const item = this.doc.createElement("div");
      item.className = "script-block";
      item.setAttribute("data-block-id", block.blockId);
      const header = this.doc.createElement("div");
      header.className = "script-block-header";
      const title = this.doc.createElement("span");
      title.textContent = block.blockId;
      const del = button(this.doc, `delete-${block.blockId}`, "Delete", () =>
        void this.deleteBlock(block.blockId),
      );
      del.setAttribute("data-delete-block", block.blockId);
      header.append(title, del);
      const code = this.doc.createElement("pre");
      code.textContent = block.sourceText;
      item.append(header, code);
      this.scriptList.appendChild(item);
    }
  }

  private toast(sound: string): void {
    const node = this.doc.createElement("span");
    node.className = "toast";
    node.setAttribute("data-sound", sound);
    node.textContent = `♪ ${sound}`;
    this.toasts.appendChild(node);
    setTimeout(() => node.remove(), 4000);
  }

  private log(level: string, message: string): void {
    const item = this.doc.createElement("li");
    item.className = `log-${level}`;
    item.textContent = message;
    this.debugList.appendChild(item);
    while (this.debugList.children.length > 80) {
      this.debugList.removeChild(this.debugList.firstChild!);
    }
  }

  private logDiagnostic(diagnostic: DiagnosticJson): void {
    this.log(diagnostic.severity === "error" ? "error" : "warn",
      `${diagnostic.severity}[${diagnostic.code}]: ${diagnostic.message}`);
  }

  private logError(error: unknown): void {
    if (error instanceof ApiError) {
      this.log("error", `${error.body.error}: ${error.body.message}`);
      for (const diagnostic of error.body.debug ?? []) {
        this.logDiagnostic(diagnostic);
      }
    } else {
      this.log("error", String(error));
    }
  }
}

function panel(doc: Document, id: string, title: string): HTMLElement {
  const node = doc.createElement("section");
  node.id = id;
  node.className = "panel";
  const heading = doc.createElement("h2");
  heading.textContent = title;
  node.appendChild(heading);
  return node;
}

function row(doc: Document, ...children: HTMLElement[]): HTMLElement {
  const node = doc.createElement("div");
  node.className = "menu-row";
  node.append(...children);
  return node;
}

function button(
  doc: Document,
  id: string,
  label: string,
  onClick: () => void,
): HTMLButtonElement {
  const node = doc.createElement("button");
  node.id = id;
  node.type = "button";
  node.textContent = label;
  node.addEventListener("click", onClick);
  return node;
}

function togglePanel(list: HTMLElement): void {
  const panelNode = list.closest(".panel") as HTMLElement | null;
  if (panelNode) {
    panelNode.hidden = !panelNode.hidden;
  }
}

export async function mountPlayground(
  root: HTMLElement,
  options: PlaygroundOptions = {},
): Promise<Playground> {
  const playground = new Playground(root, options);
  await playground.start(options.sessionId);
  return playground;
}
