/** Browser entry point: wires the canvas, the layer slider and the buttons
 * to the session API.  One mutation in flight at a time; every displayed
 * syndrome is the server's answer, never a local computation. */

import { Client, ApiError } from "./api.js";
import { Transform } from "./geometry.js";
import { latticeTransform, pickTarget, renderScene } from "./render.js";
import { Scene, buildScene } from "./scene.js";
import {
  LatticeDoc,
  ParticleDoc,
  SessionState,
  ViewState,
  clampLayer,
  opTextEdges,
} from "./types.js";

const SIZE = 720;

interface App {
  client: Client;
  lattice: LatticeDoc | null;
  state: SessionState | null;
  view: ViewState;
  mobility: ParticleDoc[];
  scene: Scene | null;
  transform: Transform | null;
  busy: boolean;
  pauli: "X" | "Z";
}

const app: App = {
  client: new Client(""),
  lattice: null,
  state: null,
  view: { sessionId: null, currentLayer: 0, overlay: null, selection: null },
  mobility: [],
  scene: null,
  transform: null,
  busy: false,
  pauli: "X",
};

function $<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function toast(msg: string) {
  const el = $<HTMLDivElement>("toast");
  el.textContent = msg;
  el.classList.add("show");
  setTimeout(() => el.classList.remove("show"), 4000);
}

function redraw() {
  if (!app.lattice) return;
  const canvas = $<HTMLCanvasElement>("disk");
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  app.scene = buildScene(app.lattice, app.view, app.state, app.mobility);
  app.transform = latticeTransform(app.lattice, SIZE);
  renderScene(ctx, app.scene, app.transform, SIZE);

  const st = app.state;
  if (st) {
    const n = st.syndrome.excited.length;
    $<HTMLSpanElement>("status").textContent =
      `v${st.version}  excitations: ${n}` +
      (app.scene.hiddenParticles ? ` (${app.scene.hiddenParticles} on other layers)` : "") +
      (st.logical ? "  [logical]" : "") +
      (st.applied ? `  applied: ${st.applied.slice(0, 60)}` : "");
  }
}

function setState(st: SessionState) {
  app.state = st;
  redraw();
}

async function mutate(fn: () => Promise<SessionState>) {
  if (app.busy || !app.view.sessionId) return;
  app.busy = true;
  try {
    setState(await fn());
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      toast(`stale view, reloading: ${err.detail}`);
      const full = await app.client.getSession(app.view.sessionId);
      setState(full);
    } else {
      toast(err instanceof Error ? err.message : String(err));
    }
  } finally {
    app.busy = false;
  }
}

async function createSession() {
  const p = Number($<HTMLInputElement>("p").value);
  const q = Number($<HTMLInputElement>("q").value);
  const layers = Number($<HTMLInputElement>("layers").value);
  const size = Number($<HTMLInputElement>("size").value);
  const torus = $<HTMLInputElement>("torus").checked;
  const hexagon = $<HTMLInputElement>("hexagon").checked;
  try {
    const made = await app.client.createSession({
      p,
      q,
      layers,
      hexagon,
      ...(torus ? { periodic_l: size } : { generations: size }),
    });
    app.lattice = made.lattice;
    app.view = {
      sessionId: made.session_id,
      currentLayer: 0,
      overlay: null,
      selection: null,
    };
    app.mobility = [];
    const slider = $<HTMLInputElement>("layer");
    slider.max = String(layers - 1);
    slider.value = "0";
    setState(await app.client.getSession(made.session_id));
  } catch (err) {
    toast(err instanceof Error ? err.message : String(err));
  }
}

function onCanvasClick(ev: MouseEvent) {
  if (!app.scene || !app.transform || !app.view.sessionId) return;
  const rect = (ev.target as HTMLCanvasElement).getBoundingClientRect();
  const hit = pickTarget(app.scene, app.transform, ev.clientX - rect.left, ev.clientY - rect.top);
  if (!hit) return;
  app.view.selection = hit.edgeId;
  redraw(); // optimistic highlight; the syndrome waits for the server
  void mutate(() =>
    app.client.apply(app.view.sessionId!, hit.edgeId, app.pauli, app.state?.version),
  );
}

async function previewOperator() {
  if (!app.view.sessionId || !app.lattice) return;
  const kind = $<HTMLSelectElement>("opkind").value;
  let params: Record<string, unknown>;
  try {
    params = JSON.parse($<HTMLTextAreaElement>("opparams").value || "{}");
  } catch {
    toast("operator params must be JSON");
    return;
  }
  // dry-run on a scratch session is overkill; ask the server to build the
  // operator by applying and undoing it, keeping the rendered text
  try {
    const st = await app.client.applyOperator(app.view.sessionId, kind, params, app.state?.version);
    const undone = await app.client.undo(app.view.sessionId, st.version);
    app.view.overlay = { kind, params, edges: opTextEdges(st.applied) };
    setState(undone);
    toast(`overlay: ${kind}, ${app.view.overlay.edges.length} edges`);
  } catch (err) {
    toast(err instanceof Error ? err.message : String(err));
  }
}

function applyOverlay() {
  const ov = app.view.overlay;
  if (!ov) {
    toast("no overlay to apply");
    return;
  }
  void mutate(async () => {
    const st = await app.client.applyOperator(app.view.sessionId!, ov.kind, ov.params, app.state?.version);
    app.view.overlay = null;
    return st;
  });
}

async function runMobility() {
  if (!app.view.sessionId) return;
  try {
    const moves = $<HTMLSelectElement>("moves").value as "x" | "z" | "both";
    const rep = await app.client.mobility(app.view.sessionId, moves);
    app.mobility = rep.positions;
    toast(
      `mobility: ${rep.positions.length} positions, ${rep.visited_state_count} states` +
        (rep.truncated ? " (truncated)" : ""),
    );
    redraw();
  } catch (err) {
    toast(err instanceof Error ? err.message : String(err));
  }
}

export function start() {
  // same-origin by default; ?api=http://host:port points elsewhere
  const override = new URLSearchParams(window.location.search).get("api");
  app.client = new Client(override ?? "");
  $<HTMLButtonElement>("create").addEventListener("click", () => void createSession());
  $<HTMLCanvasElement>("disk").addEventListener("click", onCanvasClick);
  $<HTMLInputElement>("layer").addEventListener("input", (ev) => {
    const layers = app.lattice?.layers ?? 1;
    app.view.currentLayer = clampLayer(Number((ev.target as HTMLInputElement).value), layers);
    redraw(); // view only; session state is layer-agnostic
  });
  for (const letter of ["X", "Z"] as const) {
    $<HTMLInputElement>(`pauli${letter}`).addEventListener("change", () => {
      app.pauli = letter;
    });
  }
  $<HTMLButtonElement>("undo").addEventListener("click", () =>
    void mutate(() => app.client.undo(app.view.sessionId!, app.state?.version)),
  );
  $<HTMLButtonElement>("reset").addEventListener("click", () =>
    void mutate(() => app.client.reset(app.view.sessionId!, app.state?.version)),
  );
  $<HTMLButtonElement>("preview").addEventListener("click", () => void previewOperator());
  $<HTMLButtonElement>("applyop").addEventListener("click", applyOverlay);
  $<HTMLButtonElement>("mobility").addEventListener("click", () => void runMobility());
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", start);
}
