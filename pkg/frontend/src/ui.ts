/** DOM layer: renders the editor and the game, wires clicks to the
 * state machine, and talks to the service through the typed client.
 * Every displayed move comes from /api/options; stale responses are
 * discarded by sequence number.
 */
import { Client } from "./api.js";
import {
  applyRecord,
  beginGame,
  bumpSeq,
  canStart,
  clearChain,
  createEditor,
  extendChain,
  isCurrent,
  matchingOptions,
  nextHops,
  setMode,
  setVariant,
  stopOption,
  toggleCell,
  toggleOverlay,
  resizeBoard,
} from "./game.js";
import { playTurn } from "./play.js";
import type { GameState, GrundyInfo, HopRecord } from "./types.js";

const client = new Client("");

let state: GameState = createEditor();
let editorInfo: GrundyInfo | null = null;
let busy = false;

const root = document.getElementById("app") as HTMLElement;

function set(next: GameState): void {
  state = next;
  render();
}

async function validateEditor(): Promise<void> {
  const next = bumpSeq(state);
  set(next);
  const seq = next.seq;
  try {
    const info = await client.grundy(state.board, state.variant, state.mode);
    if (isCurrent(state, seq)) {
      editorInfo = info;
      render();
    }
  } catch {
    editorInfo = null;
  }
}

async function start(): Promise<void> {
  if (!canStart(state) || busy) {
    return;
  }
  busy = true;
  try {
    const options = await client.options(state.board, state.variant, state.mode);
    set(beginGame(state, options));
  } finally {
    busy = false;
  }
}

async function commit(optionIndex: number): Promise<void> {
  const option = matchingOptions(state)[optionIndex];
  if (!option || busy) {
    return;
  }
  busy = true;
  try {
    const outcome = await playTurn(client, state, option,
                                   (n) => Math.floor(Math.random() * n));
    set(outcome.state);
  } finally {
    busy = false;
  }
}

function clickCell(index: number): void {
  if (state.phase === "editing") {
    set(toggleCell(state, index));
    void validateEditor();
    return;
  }
  if (state.phase !== "playing" || state.turn !== "human" || busy) {
    return;
  }
  // hop-by-hop entry: a click selects the next hop landing on `index`
  const candidates = nextHops(state).filter((hop) => hop.to === index);
  if (candidates.length === 1) {
    const next = extendChain(state, candidates[0]);
    if (state.variant === "single" || onlyFullChainLeft(next)) {
      const exact = stopOption(next) ?? matchingOptions(next)[0];
      if (exact && exact.move.hops.length === next.chain.length) {
        void commitOption(next, exact);
        return;
      }
    }
    set(next);
  }
}

function onlyFullChainLeft(next: GameState): boolean {
  const matches = matchingOptions(next);
  return matches.length === 1 &&
    matches[0].move.hops.length === next.chain.length;
}

async function commitOption(next: GameState,
                            option: ReturnType<typeof stopOption> & object):
    Promise<void> {
  set(next);
  busy = true;
  try {
    const outcome = await playTurn(client, next, option,
                                   (n) => Math.floor(Math.random() * n));
    set(outcome.state);
  } finally {
    busy = false;
  }
}

function stopChain(): void {
  const option = stopOption(state);
  if (option) {
    void commitOption(state, option);
  }
}

function cellClasses(index: number): string {
  const classes = ["cell", state.board[index] === "1" ? "peg" : "hole"];
  if (state.phase === "playing" && state.turn === "human") {
    if (nextHops(state).some((hop) => hop.to === index)) {
      classes.push("landing");
    }
    const chainHead = state.chain.length
      ? state.chain[state.chain.length - 1].to : null;
    if (chainHead === index) {
      classes.push("chain-head");
    }
  }
  return classes.join(" ");
}

function overlayBadge(index: number): string {
  if (!state.overlay || state.phase !== "playing" || state.turn !== "human") {
    return "";
  }
  const depth = state.chain.length;
  const values = matchingOptions(state)
    .filter((option) => option.move.hops[depth]?.to === index)
    .map((option) => option.grundy);
  if (!values.length) {
    return "";
  }
  return `<span class="badge">${[...new Set(values)].sort().join(",")}</span>`;
}

function render(): void {
  const cells = [...state.board]
    .map((_, i) =>
      `<button class="${cellClasses(i)}" data-cell="${i}">` +
      `${overlayBadge(i)}</button>`)
    .join("");

  const status = describeStatus();
  const editor = state.phase === "editing" ? `
    <div class="controls">
      <label>cells <input id="size" type="number" min="1" max="40"
             value="${state.board.length}"></label>
      <label>variant <select id="variant">
        <option value="multi" ${state.variant === "multi" ? "selected" : ""}>multihop</option>
        <option value="single" ${state.variant === "single" ? "selected" : ""}>single hop</option>
      </select></label>
      <label>board <select id="mode">
        <option value="open" ${state.mode === "open" ? "selected" : ""}>open line</option>
        <option value="fixed" ${state.mode === "fixed" ? "selected" : ""}>fixed</option>
      </select></label>
      <button id="start" ${canStart(state) ? "" : "disabled"}>start game</button>
      ${editorInfo ? `<span class="badge">${editorInfo.isP
        ? "P-position (second player wins)"
        : `nim-value ${editorInfo.grundy}`}</span>` : ""}
    </div>` : `
    <div class="controls">
      <button id="stop" ${stopOption(state) && state.chain.length ? "" : "disabled"}>
        stop chain</button>
      <label><input id="overlay" type="checkbox"
             ${state.overlay ? "checked" : ""}> show nim-values</label>
      <button id="reset">new board</button>
    </div>`;

  const history = state.history
    .map((entry, i) => {
      const hops = entry.move.hops
        .map((hop) => `${hop.from}&gt;${hop.over}&gt;${hop.to}`).join(" ");
      return `<li><b>${entry.mover}</b> ${hops} &rarr; ${entry.move.resultBoard}</li>`;
    })
    .join("");

  root.innerHTML = `
    <h1>peg duotaire</h1>
    <p class="status">${status}</p>
    <div class="board">${cells}</div>
    ${editor}
    <ol class="history">${history}</ol>`;

  root.querySelectorAll("[data-cell]").forEach((el) =>
    el.addEventListener("click", () =>
      clickCell(Number((el as HTMLElement).dataset.cell))));
  root.querySelector("#start")?.addEventListener("click", () => void start());
  root.querySelector("#stop")?.addEventListener("click", stopChain);
  root.querySelector("#reset")?.addEventListener("click", () => {
    editorInfo = null;
    set(createEditor(state.initialBoard));
  });
  root.querySelector("#overlay")?.addEventListener("change", () =>
    set(toggleOverlay(state)));
  root.querySelector("#variant")?.addEventListener("change", (event) => {
    set(setVariant(state, (event.target as HTMLSelectElement).value as never));
    void validateEditor();
  });
  root.querySelector("#mode")?.addEventListener("change", (event) => {
    set(setMode(state, (event.target as HTMLSelectElement).value as never));
    void validateEditor();
  });
  root.querySelector("#size")?.addEventListener("change", (event) => {
    set(resizeBoard(state, Number((event.target as HTMLInputElement).value)));
    void validateEditor();
  });
}

function describeStatus(): string {
  switch (state.phase) {
    case "editing":
      return "compose a board, then start: you move first";
    case "playing":
      return state.turn === "human"
        ? (state.chain.length
          ? "chain in progress: pick the next landing cell or stop"
          : "your move: click a landing cell")
        : "engine thinking";
    case "over":
      return state.loser === "human"
        ? "no move left: the engine wins"
        : "the engine is out of moves: you win";
  }
}

render();
void validateEditor();
export { applyRecord };
