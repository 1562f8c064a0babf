/** Diagnostics panels: verdicts, probability gauge, reversal table. */
import type { EvaluationResponse } from "./api.js";
import {
  fixed,
  pairLabel,
  probabilityLabel,
  sortEvents,
  triadLabel,
  type SortKey,
} from "./format.js";

export interface DiagnosticsState {
  sortKey: SortKey;
  descending: boolean;
}

export function renderDiagnostics(
  root: HTMLElement,
  response: EvaluationResponse | null,
  sort: DiagnosticsState,
  onSort: (key: SortKey) => void,
): void {
  root.textContent = "";
  if (!response) {
    const hint = document.createElement("p");
    hint.className = "hint";
    hint.textContent = "Fill every upper-triangle judgment to evaluate the matrix.";
    root.appendChild(hint);
    return;
  }

  root.appendChild(verdictPanel(response));
  root.appendChild(priorityPanel(response));
  root.appendChild(reversalPanel(response, sort, onSort));
}

function badge(text: string, good: boolean): HTMLElement {
  const span = document.createElement("span");
  span.className = `badge ${good ? "good" : "bad"}`;
  span.textContent = text;
  return span;
}

function verdictPanel(r: EvaluationResponse): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "panel";
  const h = document.createElement("h2");
  h.textContent = "Verdicts";
  panel.appendChild(h);

  const pr = document.createElement("p");
  pr.appendChild(badge(r.prConsistent ? "PR consistent" : "PR inconsistent", r.prConsistent));
  pr.appendChild(
    document.createTextNode(
      ` p(consistent) = ${probabilityLabel(r.probabilityConsistent)}`,
    ),
  );
  const gauge = document.createElement("div");
  gauge.className = "gauge";
  const fill = document.createElement("div");
  fill.className = "gauge-fill";
  fill.style.width = `${Math.round(100 * r.probabilityConsistent)}%`;
  gauge.appendChild(fill);
  panel.appendChild(pr);
  panel.appendChild(gauge);

  const cr = document.createElement("p");
  cr.appendChild(badge(r.crConsistent ? "CR consistent" : "CR inconsistent", r.crConsistent));
  cr.appendChild(
    document.createTextNode(
      ` CR = ${fixed(r.cr)} (threshold ${r.crThreshold.toFixed(2)}, ` +
        `λmax ${fixed(r.lambdaMax)}, CI ${fixed(r.ci)}, RI ${fixed(r.ri)}), ` +
        `Koczkodaj ${fixed(r.koczkodaj)}`,
    ),
  );
  panel.appendChild(cr);
  return panel;
}

function priorityPanel(r: EvaluationResponse): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "panel";
  const h = document.createElement("h2");
  h.textContent = "Priorities";
  panel.appendChild(h);
  const list = document.createElement("p");
  list.className = "priorities";
  list.textContent = r.eigenvector
    .map((x, i) => `${pairName(i, r.labels)} ${fixed(x, 3)}`)
    .join("   ");
  panel.appendChild(list);
  return panel;
}

function pairName(i: number, labels: string[] | null): string {
  return labels && labels[i] ? labels[i] : String.fromCharCode(97 + i);
}

function reversalPanel(
  r: EvaluationResponse,
  sort: DiagnosticsState,
  onSort: (key: SortKey) => void,
): HTMLElement {
  const panel = document.createElement("div");
  panel.className = "panel";
  const h = document.createElement("h2");
  const rep = r.reversalReport;
  h.textContent = `Preference reversals: ${rep.count} of ${rep.maxPossible}`;
  panel.appendChild(h);

  const stats = document.createElement("p");
  stats.textContent =
    `prop3Rev = ${fixed(rep.prop3Rev)}, max3Rev = ` +
    (rep.count === 0 ? "—" : fixed(rep.max3Rev));
  panel.appendChild(stats);

  if (rep.count === 0) return panel;

  const table = document.createElement("table");
  table.className = "reversals";
  const head = table.insertRow();
  const columns: Array<[SortKey, string]> = [
    ["pair", "pair"],
    ["triad", "triad"],
    ["fullRatio", "full ratio"],
    ["triadRatio", "triad ratio"],
    ["magnitude", "magnitude"],
  ];
  for (const [key, label] of columns) {
    const th = document.createElement("th");
    th.textContent = label + (sort.sortKey === key ? (sort.descending ? " ↓" : " ↑") : "");
    th.addEventListener("click", () => onSort(key));
    head.appendChild(th);
  }
  const maxMagnitude = Math.max(...rep.events.map((e) => e.magnitude));
  for (const e of sortEvents(rep.events, sort.sortKey, sort.descending)) {
    const row = table.insertRow();
    if (e.magnitude === maxMagnitude) row.className = "max-row";
    appendCell(row, pairLabel(e.pair, r.labels));
    appendCell(row, triadLabel(e.triad, r.labels));
    appendCell(row, fixed(e.fullRatio));
    appendCell(row, fixed(e.triadRatio));
    appendCell(row, fixed(e.magnitude, 3));
  }
  panel.appendChild(table);
  return panel;
}

function appendCell(row: HTMLTableRowElement, text: string): void {
  const cell = row.insertCell();
  cell.textContent = text;
}
