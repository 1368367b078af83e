// Orthographic two-view scene canvas rendered as SVG: a top-down XZ view
// and an elevation XY view. Objects carry data attributes so both tests
// and click handlers can find them.

import type { SceneObjectJson } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const VIEW_UNITS = 12; // world units across one view
const VIEW_PX = 360;
const SCALE = VIEW_PX / VIEW_UNITS;

export interface DrawableObject {
  id: string;
  assetType: string;
  position: number[];
  size: number[];
  color: number[] | null;
  visible: boolean;
  isButton: boolean;
}

export function drawableFromSpecObject(obj: SceneObjectJson): DrawableObject {
  return {
    id: obj.id,
    assetType: obj.assetType,
    position: obj.position,
    size: obj.size,
    color: obj.color,
    visible: obj.visible,
    isButton: obj.isButton,
  };
}

const DEFAULT_COLORS: Record<string, string> = {
  cherry: "#c0392b",
  watermelon: "#27ae60",
  apple: "#e74c3c",
  coin: "#f1c40f",
  tree: "#145a32",
  rocket: "#7f8c8d",
  turret: "#5d6d7e",
  asteroid: "#6e2c00",
  button: "#8e44ad",
  spaceship: "#aab7b8",
};

function fillFor(obj: DrawableObject): string {
  if (obj.color) {
    const [r, g, b] = [obj.color[0] ?? 0, obj.color[1] ?? 0, obj.color[2] ?? 0];
    return `rgb(${Math.round(r * 255)},${Math.round(g * 255)},${Math.round(b * 255)})`;
  }
  return DEFAULT_COLORS[obj.assetType] ?? "#95a5a6";
}

function px(world: number): number {
  return VIEW_PX / 2 + world * SCALE;
}

function pxFlip(world: number): number {
  return VIEW_PX / 2 - world * SCALE;
}

export class SceneCanvas {
  readonly element: HTMLElement;
  private topLayer: SVGGElement;
  private frontLayer: SVGGElement;
  private onObjectClick: (id: string) => void;
  private doc: Document;

  constructor(doc: Document, onObjectClick: (id: string) => void) {
    this.doc = doc;
    this.onObjectClick = onObjectClick;
    this.element = doc.createElement("div");
    this.element.className = "canvas-views";
    const make = (title: string, viewName: string): SVGGElement => {
      const wrap = doc.createElement("figure");
      const caption = doc.createElement("figcaption");
      caption.textContent = title;
      const svg = doc.createElementNS(SVG_NS, "svg");
      svg.setAttribute("viewBox", `0 0 ${VIEW_PX} ${VIEW_PX}`);
      svg.setAttribute("width", String(VIEW_PX));
      svg.setAttribute("height", String(VIEW_PX));
      svg.setAttribute("data-view", viewName);
      svg.classList.add("scene-view");
      const grid = doc.createElementNS(SVG_NS, "rect");
      grid.setAttribute("x", "0");
      grid.setAttribute("y", "0");
      grid.setAttribute("width", String(VIEW_PX));
      grid.setAttribute("height", String(VIEW_PX));
      grid.setAttribute("class", "view-bg");
      svg.appendChild(grid);
      const layer = doc.createElementNS(SVG_NS, "g");
      svg.appendChild(layer);
      wrap.appendChild(caption);
      wrap.appendChild(svg);
      this.element.appendChild(wrap);
      return layer;
    };
    this.topLayer = make("top view (x → right, z → up)", "top");
    this.frontLayer = make("elevation (x → right, y → up)", "front");
  }

  render(objects: DrawableObject[], playerPosition: number[], gaze: string[]): void {
    this.renderView(this.topLayer, "top", objects, playerPosition, gaze);
    this.renderView(this.frontLayer, "front", objects, playerPosition, gaze);
  }

  private renderView(
    layer: SVGGElement,
    view: "top" | "front",
    objects: DrawableObject[],
    playerPosition: number[],
    gaze: string[],
  ): void {
    while (layer.firstChild) {
      layer.removeChild(layer.firstChild);
    }
    for (const obj of objects) {
      const x = px(obj.position[0] ?? 0);
      const y =
        view === "top" ? pxFlip(obj.position[2] ?? 0) : pxFlip(obj.position[1] ?? 0);
      const w = Math.max(4, (obj.size[0] ?? 1) * SCALE);
      const h =
        view === "top"
          ? Math.max(4, (obj.size[2] ?? 1) * SCALE)
          : Math.max(4, (obj.size[1] ?? 1) * SCALE);
      const boxy = obj.assetType === "cube" || obj.isButton;
      const shape = boxy
        ? this.doc.createElementNS(SVG_NS, "rect")
        : this.doc.createElementNS(SVG_NS, "ellipse");
      if (boxy) {
        shape.setAttribute("x", String(x - w / 2));
        shape.setAttribute("y", String(y - h / 2));
        shape.setAttribute("width", String(w));
        shape.setAttribute("height", String(h));
      } else {
        shape.setAttribute("cx", String(x));
        shape.setAttribute("cy", String(y));
        shape.setAttribute("rx", String(w / 2));
        shape.setAttribute("ry", String(h / 2));
      }
      shape.setAttribute("data-object-id", obj.id);
      shape.setAttribute("data-asset-type", obj.assetType);
      shape.setAttribute("data-x", String(obj.position[0] ?? 0));
      shape.setAttribute("data-y", String(obj.position[1] ?? 0));
      shape.setAttribute("data-z", String(obj.position[2] ?? 0));
      shape.setAttribute("fill", fillFor(obj));
      shape.setAttribute("class", "scene-object");
      if (!obj.visible) {
        shape.setAttribute("opacity", "0.2");
      }
      if (gaze.includes(obj.id)) {
        // gaze feedback: the selected object is darkened
        shape.setAttribute("data-selected", "true");
        shape.setAttribute("filter", "brightness(0.55)");
        shape.setAttribute("stroke", "#111");
        shape.setAttribute("stroke-width", "3");
      }
      shape.addEventListener("click", () => this.onObjectClick(obj.id));
      const label = this.doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x));
      label.setAttribute("y", String(y - h / 2 - 4));
      label.setAttribute("class", "object-label");
      label.textContent = obj.id;
      layer.appendChild(shape);
      layer.appendChild(label);
    }

    const player = this.doc.createElementNS(SVG_NS, "circle");
    const pyWorld = view === "top" ? playerPosition[2] ?? 0 : playerPosition[1] ?? 0;
    player.setAttribute("cx", String(px(playerPosition[0] ?? 0)));
    player.setAttribute("cy", String(pxFlip(pyWorld)));
    player.setAttribute("r", String(0.25 * SCALE));
    player.setAttribute("class", "player-marker");
    player.setAttribute("data-player", "true");
    layer.appendChild(player);
  }
}
