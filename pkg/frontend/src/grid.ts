/** The editable judgment grid.
 *
 * Upper-triangle cells are scale pickers; the diagonal is fixed; lower
 * cells render the derived reciprocal and are not editable.
 */
import { SCALE_CHOICES, SessionState } from "./state.js";
import { alternativeName } from "./format.js";

export interface GridCallbacks {
  onEdit(): void;
}

export function renderGrid(
  root: HTMLElement,
  state: SessionState,
  highlight: Array<[number, number]>,
  callbacks: GridCallbacks,
): void {
  const hl = new Set(highlight.map(([i, j]) => `${i},${j}`));
  root.textContent = "";
  const table = document.createElement("table");
  table.className = "grid";

  const head = table.insertRow();
  head.insertCell();
  for (let j = 0; j < state.order; j++) {
    const th = document.createElement("th");
    th.textContent = alternativeName(j, null);
    head.appendChild(th);
  }

  for (let i = 0; i < state.order; i++) {
    const row = table.insertRow();
    const th = document.createElement("th");
    th.textContent = alternativeName(i, null);
    row.appendChild(th);
    for (let j = 0; j < state.order; j++) {
      const cell = row.insertCell();
      cell.dataset.i = String(i);
      cell.dataset.j = String(j);
      if (hl.has(`${i},${j}`)) cell.classList.add("reversal-max");
      if (i === j) {
        cell.textContent = "1";
        cell.className += " diagonal";
      } else if (i < j) {
        cell.appendChild(makePicker(state, i, j, callbacks));
      } else {
        const value = state.display(i, j);
        cell.textContent = value ?? "·";
        cell.classList.add("derived");
        cell.title = "reciprocal of the upper-triangle judgment";
      }
    }
  }
  root.appendChild(table);
}

function makePicker(
  state: SessionState,
  i: number,
  j: number,
  callbacks: GridCallbacks,
): HTMLSelectElement {
  const select = document.createElement("select");
  const empty = document.createElement("option");
  empty.value = "";
  empty.textContent = "—";
  select.appendChild(empty);
  for (const choice of SCALE_CHOICES) {
    const opt = document.createElement("option");
    opt.value = choice;
    opt.textContent = choice;
    select.appendChild(opt);
  }
  select.value = state.getUpper(i, j) ?? "";
  select.addEventListener("change", () => {
    state.setCell(i, j, select.value === "" ? null : select.value);
    callbacks.onEdit();
  });
  return select;
}
