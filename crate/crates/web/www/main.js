import init, { censusGrid, chamberDiagram, classifyChain } from "./pkg/pqtriples_web.js";

const num = (form, name) => Number(form.elements[name].value);
const str = (form, name) => form.elements[name].value;

function report(el, fn) {
  try {
    el.classList.remove("error");
    return fn();
  } catch (e) {
    el.classList.add("error");
    el.textContent = String(e.message ?? e);
    return null;
  }
}

function clear(canvas) {
  const ctx = canvas.getContext("2d");
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.font = "12px system-ui, sans-serif";
  return ctx;
}

const COLOURS = { CZero: "#2a7ab0", BZero: "#c0652a", Both: "#6a3fa0" };

function drawCensus() {
  const form = document.getElementById("census");
  const info = document.getElementById("census-info");
  const canvas = document.getElementById("census-plot");
  const ctx = clear(canvas);
  const data = report(info, () =>
    JSON.parse(censusGrid(num(form, "p"), num(form, "q"), num(form, "genus"), str(form, "dv"), str(form, "dw"))));
  if (!data) return;
  const [v0, v1] = data.dv, [w0, w1] = data.dw;
  const pad = 30;
  const cell = Math.min((canvas.width - pad) / (v1 - v0 + 1), (canvas.height - pad) / (w1 - w0 + 1));
  for (const pt of data.points) {
    const x = pad + (pt.d_v - v0) * cell;
    const y = canvas.height - pad - (pt.d_w - w0 + 1) * cell;
    ctx.fillStyle = pt.allowed ? COLOURS[pt.minima_type] : "#e4e4e4";
    ctx.fillRect(x + 0.5, y + 0.5, Math.max(cell - 1, 1), Math.max(cell - 1, 1));
  }
  ctx.fillStyle = "#222";
  ctx.fillText(`d_V ${v0}…${v1}`, pad, canvas.height - 10);
  ctx.save();
  ctx.translate(12, canvas.height - pad);
  ctx.rotate(-Math.PI / 2);
  ctx.fillText(`d_W ${w0}…${w1}`, 0, 0);
  ctx.restore();
  info.textContent = `${data.allowed_count} of ${data.points.length} pairs satisfy |τ| ≤ ${data.bound}. ` +
    "Colour: blue CZero, orange BZero, purple both; grey violates the bound.";
}

function drawChambers() {
  const form = document.getElementById("chambers");
  const info = document.getElementById("chamber-info");
  const canvas = document.getElementById("chamber-plot");
  const ctx = clear(canvas);
  const data = report(info, () => JSON.parse(chamberDiagram(
    num(form, "n1"), num(form, "n2"), num(form, "d1"), num(form, "d2"), str(form, "cap"), str(form, "alpha"))));
  if (!data) return;
  const left = 30, right = canvas.width - 30, axis = 60;
  const end = data.range_end_value;
  const xOf = (a) => left + (end > 0 ? (a / end) * (right - left) : 0);
  ctx.strokeStyle = "#222";
  ctx.beginPath();
  ctx.moveTo(left, axis);
  ctx.lineTo(right, axis);
  ctx.stroke();
  ctx.textAlign = "center";
  for (const w of data.walls) {
    const x = xOf(w.value);
    ctx.strokeStyle = "#b00";
    ctx.beginPath();
    ctx.moveTo(x, axis - 18);
    ctx.lineTo(x, axis + 18);
    ctx.stroke();
    ctx.fillStyle = "#222";
    ctx.fillText(w.alpha, x, axis + 32);
  }
  if (data.alpha_value !== null && data.alpha_value >= 0 && data.alpha_value <= end) {
    ctx.fillStyle = "#2a7ab0";
    ctx.beginPath();
    ctx.arc(xOf(data.alpha_value), axis, 6, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(`α = ${data.alpha}`, xOf(data.alpha_value), axis - 26);
  }
  const lines = [
    `triple (${data.triple.join(", ")})${data.dualized ? "  [dualized]" : ""}`,
    `α_M = ${data.alpha_max}, range [0, ${data.range_end}]`,
    `chambers: ${data.chambers.map((c) => `(${c.lower}, ${c.upper})`).join(" ")}`,
  ];
  for (const w of data.walls) {
    lines.push(`wall ${w.alpha}: ${w.witnesses.map((c) => `(${c.join(", ")})`).join(" ")}`);
  }
  if (data.location) {
    const l = data.location;
    lines.push(l.kind === "chamber" ? `α lies in (${l.lower}, ${l.upper})`
      : l.kind === "wall" ? `α lies on the wall ${l.alpha}` : "α is outside the range");
  }
  info.textContent = lines.join("\n");
}

function drawChain() {
  const form = document.getElementById("chain");
  const info = document.getElementById("chain-info");
  const canvas = document.getElementById("chain-plot");
  const ctx = clear(canvas);
  const data = report(info, () => JSON.parse(classifyChain(str(form, "spec"), num(form, "genus"))));
  if (!data) return;
  const maxRank = Math.max(...data.grading.map((u) => u.rank), 1);
  const slot = canvas.width / data.grading.length;
  const base = canvas.height - 30;
  ctx.textAlign = "center";
  for (const [i, u] of data.grading.entries()) {
    const h = (u.rank / maxRank) * (base - 30);
    ctx.fillStyle = u.k > 0 && u.k % 2 === 0 ? "#c0652a" : "#2a7ab0";
    ctx.fillRect(i * slot + slot * 0.2, base - h, slot * 0.6, h);
    ctx.fillStyle = "#222";
    ctx.fillText(`U${u.k}`, i * slot + slot / 2, base + 14);
    ctx.fillText(`${u.rank} / ${u.degree}`, i * slot + slot / 2, base - h - 4);
  }
  info.textContent = [
    `chain ${data.chain}`,
    `verdict: ${data.verdict}`,
    `Higgs type (p, q, d_V, d_W) = (${data.higgs.join(", ")}), ${data.allowed ? "within" : "violates"} the Milnor–Wood bound`,
    ...data.even_tests.map((t) => `U${t.k} → U${t.k + 1}⊗K: ${t.feasible ? "numerically possible" : "ranks/degrees obstruct"}`),
  ].join("\n");
}

await init();
for (const [id, draw] of [["census", drawCensus], ["chambers", drawChambers], ["chain", drawChain]]) {
  const form = document.getElementById(id);
  form.addEventListener("input", draw);
  form.addEventListener("submit", (e) => e.preventDefault());
  draw();
}
