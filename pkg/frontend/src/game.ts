/** Pure game-state logic for the duotaire UI.
 *
 * The client never invents moves: everything playable comes from
 * /api/options records, boards advance only to their resultBoard, and
 * the whole history replays from the initial board as a consistency
 * check after every turn.
 */
import type {
  ApiMoveRecord,
  GameState,
  HistoryEntry,
  HopRecord,
  Mode,
  OptionRecord,
  Player,
  Variant,
} from "./types.js";

export function createEditor(initial = "110110"): GameState {
  return {
    phase: "editing",
    board: initial,
    variant: "multi",
    mode: "open",
    turn: "human",
    initialBoard: initial,
    history: [],
    options: [],
    chain: [],
    overlay: false,
    loser: null,
    seq: 0,
  };
}

export function toggleCell(state: GameState, index: number): GameState {
  if (state.phase !== "editing" || index < 0 || index >= state.board.length) {
    return state;
  }
  const cells = state.board.split("");
  cells[index] = cells[index] === "1" ? "0" : "1";
  return { ...state, board: cells.join(""), initialBoard: cells.join("") };
}

export function resizeBoard(state: GameState, length: number): GameState {
  if (state.phase !== "editing" || length < 1 || length > 40) {
    return state;
  }
  const board = state.board.slice(0, length).padEnd(length, "0");
  return { ...state, board, initialBoard: board };
}

export function setVariant(state: GameState, variant: Variant): GameState {
  return state.phase === "editing" ? { ...state, variant } : state;
}

export function setMode(state: GameState, mode: Mode): GameState {
  return state.phase === "editing" ? { ...state, mode } : state;
}

export function toggleOverlay(state: GameState): GameState {
  return { ...state, overlay: !state.overlay };
}

export function canStart(state: GameState): boolean {
  return state.phase === "editing" && state.board.includes("1");
}

/** Apply a move record to a board text, exactly as the service does:
 * the result covers the old text plus any cells the hops touched
 * outside it on the left (offsetDelta) or right. */
export function applyRecord(board: string, move: ApiMoveRecord): string {
  let lo = 0;
  let hi = board.length;
  for (const hop of move.hops) {
    lo = Math.min(lo, hop.from, hop.to);
    hi = Math.max(hi, hop.from + 1, hop.to + 1);
  }
  if (lo !== move.offsetDelta) {
    throw new Error(`offsetDelta ${move.offsetDelta} does not match hops (${lo})`);
  }
  const cells: string[] = [];
  for (let coord = lo; coord < hi; coord += 1) {
    cells.push(coord >= 0 && coord < board.length ? board[coord] : "0");
  }
  for (const hop of move.hops) {
    const [f, o, t] = [hop.from - lo, hop.over - lo, hop.to - lo];
    if (cells[f] !== "1" || cells[o] !== "1" || cells[t] !== "0") {
      throw new Error(`illegal hop ${hop.from}>${hop.over}>${hop.to} on ${board}`);
    }
    cells[f] = "0";
    cells[o] = "0";
    cells[t] = "1";
  }
  return cells.join("");
}

/** Replay the whole history from the initial board; throws if any move
 * record is inconsistent.  The result must equal the current board. */
export function replayHistory(initial: string, history: HistoryEntry[]): string {
  let board = initial;
  for (const entry of history) {
    if (entry.board !== board) {
      throw new Error(`history out of order at ${entry.board}`);
    }
    const replayed = applyRecord(board, entry.move);
    if (replayed !== entry.move.resultBoard) {
      throw new Error(`replay mismatch: ${replayed} != ${entry.move.resultBoard}`);
    }
    board = entry.move.resultBoard;
  }
  return board;
}

export function historyConsistent(state: GameState): boolean {
  return replayHistory(state.initialBoard, state.history) === state.board;
}

/** Options whose hop chains extend the partial chain entered so far. */
export function matchingOptions(state: GameState): OptionRecord[] {
  return state.options.filter((option) => {
    if (option.move.hops.length < state.chain.length) {
      return false;
    }
    return state.chain.every((hop, i) => sameHop(hop, option.move.hops[i]));
  });
}

function sameHop(a: HopRecord, b: HopRecord): boolean {
  return a.from === b.from && a.over === b.over && a.to === b.to;
}

/** Next hops the player may click, given the chain entered so far. */
export function nextHops(state: GameState): HopRecord[] {
  const depth = state.chain.length;
  const seen = new Map<string, HopRecord>();
  for (const option of matchingOptions(state)) {
    const hop = option.move.hops[depth];
    if (hop) {
      seen.set(`${hop.from}>${hop.over}>${hop.to}`, hop);
    }
  }
  return [...seen.values()];
}

/** The option finishing exactly at the entered chain, if stopping here
 * is legal (multihop chains may stop after any hop). */
export function stopOption(state: GameState): OptionRecord | null {
  return matchingOptions(state)
    .find((option) => option.move.hops.length === state.chain.length) ?? null;
}

export function extendChain(state: GameState, hop: HopRecord): GameState {
  const extended = { ...state, chain: [...state.chain, hop] };
  if (matchingOptions(extended).length === 0) {
    return state; // not a hop of any legal move: ignore
  }
  return extended;
}

export function clearChain(state: GameState): GameState {
  return { ...state, chain: [] };
}

export function beginGame(state: GameState, options: OptionRecord[],
                          firstMover: Player = "human"): GameState {
  const stuck = firstMover === "human" && options.length === 0;
  return {
    ...state,
    phase: stuck ? "over" : "playing",
    loser: stuck ? "human" : null,
    turn: firstMover,
    history: [],
    options,
    chain: [],
    initialBoard: state.board,
  };
}

function pushMove(state: GameState, mover: Player,
                  move: ApiMoveRecord): GameState {
  const entry: HistoryEntry = { board: state.board, mover, move };
  return {
    ...state,
    board: move.resultBoard,
    history: [...state.history, entry],
    chain: [],
    options: [],
  };
}

/** Commit the human's chosen option (chain already validated). */
export function applyHuman(state: GameState, option: OptionRecord): GameState {
  if (state.phase !== "playing" || state.turn !== "human") {
    return state;
  }
  return { ...pushMove(state, "human", option.move), turn: "engine" };
}

/** Commit the engine's reply and the options for the human's next turn;
 * an empty reply means the engine had no move and loses. */
export function applyEngine(state: GameState, reply: ApiMoveRecord | null,
                            nextOptions: OptionRecord[]): GameState {
  if (state.phase !== "playing" || state.turn !== "engine") {
    return state;
  }
  if (reply === null) {
    return { ...state, phase: "over", loser: "engine" };
  }
  const moved = { ...pushMove(state, "engine", reply), turn: "human" as Player };
  if (nextOptions.length === 0) {
    return { ...moved, phase: "over", loser: "human" };
  }
  return { ...moved, options: nextOptions };
}

export function bumpSeq(state: GameState): GameState {
  return { ...state, seq: state.seq + 1 };
}

export function isCurrent(state: GameState, seq: number): boolean {
  return state.seq === seq;
}
