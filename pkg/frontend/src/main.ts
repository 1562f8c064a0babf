/** Application wiring: grid edits -> debounced evaluation -> panels. */
import { ApiClient, type EvaluationResponse } from "./api.js";
import { renderDiagnostics, type DiagnosticsState } from "./diagnostics.js";
import { maxReversalCells, type SortKey } from "./format.js";
import { renderGrid } from "./grid.js";
import { EvaluationScheduler } from "./scheduler.js";
import { MAX_ORDER, MIN_ORDER, SessionState } from "./state.js";

const api = new ApiClient("");
const state = new SessionState(5);
let lastResponse: EvaluationResponse | null = null;
const sortState: DiagnosticsState = { sortKey: "magnitude", descending: true };

const gridRoot = document.getElementById("grid") as HTMLElement;
const panelsRoot = document.getElementById("panels") as HTMLElement;
const statusEl = document.getElementById("status") as HTMLElement;
const bannerEl = document.getElementById("banner") as HTMLElement;
const orderSelect = document.getElementById("order") as HTMLSelectElement;
const fillOnes = document.getElementById("fill-ones") as HTMLButtonElement;
const retryButton = document.getElementById("retry") as HTMLButtonElement;

const scheduler = new EvaluationScheduler<EvaluationResponse>(
  (matrix) => api.evaluate(matrix),
  (result) => {
    lastResponse = result;
    bannerEl.hidden = true;
    statusEl.textContent = "";
    redraw();
  },
  (err) => {
    const detail =
      typeof err === "object" && err !== null && "detail" in err
        ? String((err as { detail: unknown }).detail)
        : "network failure";
    bannerEl.hidden = false;
    bannerEl.querySelector("span")!.textContent = `evaluation failed: ${detail}`;
    statusEl.textContent = "";
  },
  300,
);

function maybeEvaluate(): void {
  const matrix = state.toMatrix();
  if (matrix === null) {
    // never send a partial matrix
    scheduler.cancelPending();
    statusEl.textContent = `${state.filledCount()} of ${state.upperCellTotal()} judgments entered`;
    lastResponse = null;
    redraw();
    return;
  }
  statusEl.textContent = "evaluating…";
  scheduler.schedule(matrix);
}

function redraw(): void {
  const highlight = lastResponse ? maxReversalCells(lastResponse.reversalReport.events) : [];
  renderGrid(gridRoot, state, highlight, { onEdit: onEdited });
  renderDiagnostics(panelsRoot, lastResponse, sortState, onSort);
}

function onEdited(): void {
  // keep the reciprocal side in sync immediately, then evaluate
  redraw();
  maybeEvaluate();
}

function onSort(key: SortKey): void {
  if (sortState.sortKey === key) sortState.descending = !sortState.descending;
  else {
    sortState.sortKey = key;
    sortState.descending = key === "magnitude";
  }
  redraw();
}

for (let n = MIN_ORDER; n <= MAX_ORDER; n++) {
  const opt = document.createElement("option");
  opt.value = String(n);
  opt.textContent = `${n} alternatives`;
  orderSelect.appendChild(opt);
}
orderSelect.value = String(state.order);
orderSelect.addEventListener("change", () => {
  state.setOrder(Number(orderSelect.value));
  lastResponse = null;
  onEdited();
});

fillOnes.addEventListener("click", () => {
  state.fillAll("1");
  onEdited();
});

retryButton.addEventListener("click", () => {
  bannerEl.hidden = true;
  maybeEvaluate();
});

redraw();
maybeEvaluate();
