import init, { toy_trajectory, phi_grid, basin_map, restore_squares } from "./pkg/dcboost_web.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

const VARIANTS = [
  ["dca", "DCA", "#1f77b4"],
  ["bdca", "BDCA", "#2ca02c"],
  ["nmbdca", "nmBDCA", "#ff7f0e"],
  ["ibdca", "IBDCA", "#d62728"],
];
const ATTRACTORS = [["(2,2)", "#4c72b0"], ["(0,2)", "#55a868"], ["(2,0)", "#c44e52"], ["(0,0)", "#dddd88"], ["other", "#000"]];
const VIEW = { scad: [-0.5, 3.0], quadl1: [-0.5, 2.5] };

function report(err) {
  $("status").textContent = String(err);
}

// Trajectory view.

const tCanvas = $("t-canvas");
let heat = null;

function toPixel(x, [lo, hi]) {
  return ((x - lo) / (hi - lo)) * tCanvas.width;
}

function drawHeat(example) {
  const [lo, hi] = VIEW[example];
  const n = 140;
  const g = phi_grid(example, lo, hi, n);
  let min = Infinity, max = -Infinity;
  for (const v of g) { min = Math.min(min, v); max = Math.max(max, v); }
  const img = new ImageData(n, n);
  for (let k = 0; k < g.length; k++) {
    const t = Math.sqrt((g[k] - min) / (max - min || 1));
    img.data.set([255 * t, 255 * t, 255 * (0.4 + 0.6 * t), 255], 4 * k);
  }
  const off = new OffscreenCanvas(n, n);
  off.getContext("2d").putImageData(img, 0, 0);
  heat = off;
}

function drawTrajectories() {
  const example = $("t-example").value;
  const view = VIEW[example];
  const ctx = tCanvas.getContext("2d");
  ctx.imageSmoothingEnabled = true;
  ctx.drawImage(heat, 0, 0, tCanvas.width, tCanvas.height);
  const lines = [];
  for (const [name, label, color] of VARIANTS) {
    let flat;
    try {
      flat = toy_trajectory(example, name, num("t-u"), num("t-v"), num("t-alpha"), num("t-beta"),
        name === "bdca" || name === "nmbdca" ? num("t-lambda") - 1 : num("t-lambda"));
    } catch (e) {
      lines.push(`${label.padEnd(7)} ${e}`);
      continue;
    }
    ctx.strokeStyle = color;
    ctx.fillStyle = color;
    ctx.lineWidth = 2;
    ctx.beginPath();
    for (let k = 0; k < flat.length; k += 4) {
      const px = toPixel(flat[k], view), py = tCanvas.height - toPixel(flat[k + 1], view);
      k === 0 ? ctx.moveTo(px, py) : ctx.lineTo(px, py);
    }
    ctx.stroke();
    for (let k = 0; k < flat.length; k += 4) {
      const px = toPixel(flat[k], view), py = tCanvas.height - toPixel(flat[k + 1], view);
      ctx.fillRect(px - 2, py - 2, 4, 4);
    }
    const m = flat.length;
    lines.push(`${label.padEnd(7)} ${String(m / 4 - 1).padStart(3)} steps -> (${flat[m - 4].toFixed(4)}, ${flat[m - 3].toFixed(4)})  phi = ${flat[m - 2].toFixed(6)}`);
    lines.push(`        lambda: ${Array.from(flat.filter((_, i) => i % 4 === 3)).slice(0, 8).map((l) => l.toFixed(3)).join(" ")}`);
  }
  $("t-out").textContent = lines.join("\n");
}

function refreshToy(redrawHeat) {
  try {
    if (redrawHeat) drawHeat($("t-example").value);
    drawTrajectories();
  } catch (e) {
    report(e);
  }
}

$("t-example").addEventListener("change", () => {
  const scad = $("t-example").value === "scad";
  $("t-beta").value = scad ? 0.7 : 0.5;
  $("t-lambda").value = scad ? 3 : 2;
  $("t-u").value = scad ? 2.2 : 0.5;
  $("t-v").value = scad ? 0.4 : 1;
  refreshToy(true);
});
for (const id of ["t-alpha", "t-beta", "t-lambda", "t-u", "t-v"]) {
  $(id).addEventListener("change", () => refreshToy(false));
}
tCanvas.addEventListener("click", (ev) => {
  const [lo, hi] = VIEW[$("t-example").value];
  const r = tCanvas.getBoundingClientRect();
  $("t-u").value = (lo + ((ev.clientX - r.left) / r.width) * (hi - lo)).toFixed(3);
  $("t-v").value = (lo + (1 - (ev.clientY - r.top) / r.height) * (hi - lo)).toFixed(3);
  refreshToy(false);
});

// Basin maps.

$("b-legend").innerHTML = ATTRACTORS.map(([l, c]) => `<span style="background:${c};color:${l === "(0,0)" ? "#000" : "#fff"}">${l}</span>`).join("");

function basinCanvas(label, codes, n) {
  const canvas = document.createElement("canvas");
  canvas.width = n;
  canvas.height = n;
  canvas.style.width = canvas.style.height = "200px";
  const img = new ImageData(n, n);
  const rgb = ATTRACTORS.map(([, c]) => [1, 3, 5].map((i) => parseInt(c.length === 4 ? c[(i + 1) / 2].repeat(2) : c.slice(i, i + 2), 16)));
  const counts = [0, 0, 0, 0, 0];
  codes.forEach((a, k) => { img.data.set([...rgb[a], 255], 4 * k); counts[a]++; });
  canvas.getContext("2d").putImageData(img, 0, 0);
  const fig = document.createElement("div");
  fig.className = "fig";
  fig.append(canvas, document.createElement("br"), `${label}: (0,0) ${(100 * counts[3] / codes.length).toFixed(1)}%`);
  return fig;
}

$("b-run").addEventListener("click", () => {
  const n = Math.max(8, Math.min(256, Math.round(num("b-n"))));
  const row = $("b-row");
  row.replaceChildren();
  try {
    for (const [name, label] of VARIANTS) row.append(basinCanvas(label, basin_map(name, n), n));
  } catch (e) {
    report(e);
  }
});

// Restoration.

function grayCanvas(label, bytes, n) {
  const canvas = document.createElement("canvas");
  canvas.width = n;
  canvas.height = n;
  canvas.style.width = canvas.style.height = "220px";
  const img = new ImageData(n, n);
  bytes.forEach((b, k) => img.data.set([b, b, b, 255], 4 * k));
  canvas.getContext("2d").putImageData(img, 0, 0);
  const fig = document.createElement("div");
  fig.className = "fig";
  fig.append(canvas, document.createElement("br"), label);
  return fig;
}

$("r-run").addEventListener("click", () => {
  const n = Math.max(16, Math.min(256, Math.round(num("r-size"))));
  try {
    const t0 = performance.now();
    const r = restore_squares(n, num("r-gamma"), num("r-seed"), $("r-variant").value);
    const ms = performance.now() - t0;
    $("r-row").replaceChildren(
      grayCanvas("clean", r.clean(), n),
      grayCanvas(`noisy, ${r.psnr_noisy().toFixed(2)} dB`, r.noisy(), n),
      grayCanvas(`restored, ${r.psnr_restored().toFixed(2)} dB`, r.restored(), n),
    );
    const e = r.energies();
    $("r-out").textContent = `${r.iterations()} outer iterations in ${ms.toFixed(0)} ms\n`
      + `energy ${e[0].toFixed(1)} -> ${e[e.length - 1].toFixed(1)}`;
    r.free();
  } catch (e) {
    report(e);
  }
});

init().then(() => {
  $("status").textContent = "";
  refreshToy(true);
}).catch(report);
