import init, { analyze, play, layout, strategies } from "./pkg/indicol_web.js";

const PALETTE = ["#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
  "#42d4f4", "#f032e6", "#bfef45", "#fabed4", "#469990"];
const SIZE = 420;
const $ = (id) => document.getElementById(id);
const out = $("out");

let graph = null;
let match = null;
let shown = 0;

function show(text, isError = false) {
  out.textContent = text;
  out.className = isError ? "err" : "";
}

function guard(fn) {
  try {
    fn();
  } catch (e) {
    show(String(e.message ?? e), true);
  }
}

function svgEl(name, attrs) {
  const el = document.createElementNS("http://www.w3.org/2000/svg", name);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

function render() {
  const svg = $("view");
  svg.replaceChildren();
  if (!graph) return;
  const at = (v) => graph.points[v].map((c) => c * SIZE);
  for (const [u, v] of graph.edges) {
    const [x1, y1] = at(u), [x2, y2] = at(v);
    svg.append(svgEl("line", { x1, y1, x2, y2 }));
  }
  const colors = new Array(graph.n).fill(0);
  const moves = match ? match.transcript.slice(0, shown) : [];
  for (const m of moves) colors[m.vertex] = m.color;
  const current = moves.length ? moves[moves.length - 1].vertex : -1;
  const blocked = match && shown === match.transcript.length ? match.blocked : null;
  for (let v = 0; v < graph.n; v++) {
    const [cx, cy] = at(v);
    const cls = v === blocked ? "blocked" : v === current ? "current" : "";
    const fill = colors[v] ? PALETTE[(colors[v] - 1) % PALETTE.length] : "#fff";
    svg.append(svgEl("circle", { cx, cy, r: 13, fill, class: cls }));
    const label = svgEl("text", { x: cx, y: cy + 4, "text-anchor": "middle" });
    label.textContent = colors[v] ? `${graph.labels[v]}:${colors[v]}` : graph.labels[v];
    svg.append(label);
  }
}

function updateStepper() {
  const total = match ? match.transcript.length : 0;
  $("prev").disabled = !match || shown === 0;
  $("next").disabled = !match || shown === total;
  if (!match) {
    $("step").textContent = "";
    return;
  }
  const done = shown === total;
  const result = match.outcome === "ANN_WINS" ? "Ann wins" : `Ben wins: vertex ${match.blocked} is blocked`;
  $("step").textContent = `move ${shown}/${total}` + (done ? ` (${result})` : "");
}

function draw() {
  guard(() => {
    graph = JSON.parse(layout($("expr").value));
    match = null;
    updateStepper();
    render();
    show(`${graph.n} vertices, ${graph.edges.length} edges`);
  });
}

function runAnalyze() {
  guard(() => {
    draw();
    const a = JSON.parse(analyze($("expr").value));
    const lines = [
      `graph6  ${a.graph6}`,
      `n ${a.n}  edges ${a.edges}  max degree ${a.max_degree}`,
      `chi ${a.chi ?? "-"}  omega ${a.omega ?? "-"}  alpha ${a.alpha ?? "-"}  col ${a.col}`,
    ];
    if (a.chi_i != null) {
      lines.push(`indicated chromatic number ${a.chi_i}`);
      lines.push("winnable  " + a.winnable.map((w, i) => `${i + 1}:${w ? "win" : "lose"}`).join(" "));
    }
    if (a.note) lines.push(a.note);
    lines.push("", "classes");
    for (const c of a.classes) {
      const w = c.witness ? `  (${c.witness.pattern} at ${c.witness.embedding.map.join(",")})` : "";
      lines.push(`  ${c.member ? "yes" : "no "}  ${c.name}${w}`);
    }
    if (a.decomposition) lines.push("", "structure", JSON.stringify(a.decomposition, null, 1));
    show(lines.join("\n"));
  });
}

function runPlay() {
  guard(() => {
    draw();
    match = JSON.parse(play($("expr").value, Number($("k").value), $("strategy").value));
    shown = 0;
    updateStepper();
    render();
    const lines = match.transcript.map((m, i) => `${i + 1}. vertex ${m.vertex} -> color ${m.color}`);
    if (match.blocked != null) lines.push(`vertex ${match.blocked} presented with no legal color`);
    lines.push(`${match.outcome} (${match.positions} positions searched)`);
    for (const l of match.log) lines.push(`log: ${l}`);
    show(lines.join("\n"));
  });
}

function step(delta) {
  if (!match) return;
  shown = Math.max(0, Math.min(match.transcript.length, shown + delta));
  updateStepper();
  render();
}

await init();
for (const name of JSON.parse(strategies())) {
  $("strategy").append(new Option(name, name, name === "auto", name === "auto"));
}
$("draw").onclick = draw;
$("analyze").onclick = runAnalyze;
$("play").onclick = runPlay;
$("prev").onclick = () => step(-1);
$("next").onclick = () => step(1);
$("expr").addEventListener("keydown", (e) => { if (e.key === "Enter") runAnalyze(); });
runAnalyze();
