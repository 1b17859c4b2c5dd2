/**
 * The clickable (risk, trade-off) plane.
 *
 * Rendered as SVG: the feasible region is shaded by a polygon built
 * directly from the /api/frontier samples, so the shading agrees with
 * the server's parabola sample-for-sample. Clicks above the curve are
 * allowed — the point is marked and the server's verdict (422 with the
 * actual bound) drives the infeasible badge, teaching the shape of the
 * space instead of hiding it.
 */

const SVG_NS = "http://www.w3.org/2000/svg";

export interface DecisionSpaceOptions {
  width?: number;
  height?: number;
  onSelect?: (alpha: number, delta: number) => void;
}

export class DecisionSpace {
  readonly root: SVGSVGElement;
  readonly width: number;
  readonly height: number;
  private region: SVGPolygonElement;
  private curve: SVGPolylineElement;
  private marker: SVGCircleElement;
  private frontierAlphas: number[] = [];
  private frontierDeltaMax: number[] = [];

  constructor(options: DecisionSpaceOptions = {}) {
    this.width = options.width ?? 320;
    this.height = options.height ?? 320;
    this.root = document.createElementNS(SVG_NS, "svg");
    this.root.setAttribute("viewBox", `0 0 ${this.width} ${this.height}`);
    this.root.setAttribute("width", String(this.width));
    this.root.setAttribute("height", String(this.height));
    this.root.classList.add("decision-space");

    const background = document.createElementNS(SVG_NS, "rect");
    background.setAttribute("width", String(this.width));
    background.setAttribute("height", String(this.height));
    background.setAttribute("class", "space-background");
    this.root.appendChild(background);

    this.region = document.createElementNS(SVG_NS, "polygon");
    this.region.setAttribute("class", "feasible-region");
    this.root.appendChild(this.region);

    this.curve = document.createElementNS(SVG_NS, "polyline");
    this.curve.setAttribute("class", "frontier-curve");
    this.curve.setAttribute("fill", "none");
    this.root.appendChild(this.curve);

    this.marker = document.createElementNS(SVG_NS, "circle");
    this.marker.setAttribute("r", "5");
    this.marker.setAttribute("class", "point-marker");
    this.marker.setAttribute("visibility", "hidden");
    this.root.appendChild(this.marker);

    const onSelect = options.onSelect;
    if (onSelect) {
      this.root.addEventListener("click", (event) => {
        const [alpha, delta] = this.fromPixels(event);
        onSelect(alpha, delta);
      });
    }
  }

  /** x grows with alpha, y shrinks with delta (origin bottom-left). */
  toPixels(alpha: number, delta: number): [number, number] {
    return [alpha * this.width, (1 - delta) * this.height];
  }

  private fromPixels(event: MouseEvent): [number, number] {
    const rect = this.root.getBoundingClientRect();
    const width = rect.width || this.width;
    const height = rect.height || this.height;
    const alpha = clamp((event.clientX - rect.left) / width);
    const delta = clamp(1 - (event.clientY - rect.top) / height);
    return [alpha, delta];
  }

  setFrontier(alphas: number[], deltaMax: number[]): void {
    this.frontierAlphas = alphas;
    this.frontierDeltaMax = deltaMax;
    const pts = alphas.map((a, i) => this.toPixels(a, deltaMax[i]).join(","));
    this.curve.setAttribute("points", pts.join(" "));
    const base = [
      this.toPixels(1, 0).join(","),
      this.toPixels(0, 0).join(","),
    ];
    this.region.setAttribute("points", pts.concat(base).join(" "));
  }

  /** Shading boundary y-pixel at a frontier sample (tests pin this to the data). */
  boundaryPixelAt(index: number): number {
    return this.toPixels(0, this.frontierDeltaMax[index])[1];
  }

  get frontierSize(): number {
    return this.frontierAlphas.length;
  }

  setPoint(alpha: number, delta: number, feasible: boolean | null): void {
    const [x, y] = this.toPixels(alpha, delta);
    this.marker.setAttribute("cx", String(x));
    this.marker.setAttribute("cy", String(y));
    this.marker.setAttribute("visibility", "visible");
    this.marker.classList.toggle("infeasible", feasible === false);
  }
}

function clamp(value: number): number {
  return Math.min(1, Math.max(0, value));
}
