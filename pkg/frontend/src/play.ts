/** Turn orchestration: the human commits an option, the engine answers
 * with a winning move from /api/best, falling back to any legal option
 * when it has none (it is losing and merely delays).
 */
import type { Client } from "./api.js";
import type { ApiMoveRecord, GameState, OptionRecord } from "./types.js";
import { applyEngine, applyHuman, historyConsistent } from "./game.js";

export interface TurnOutcome {
  state: GameState;
  engineMove: ApiMoveRecord | null;
}

export async function engineReply(client: Client, state: GameState,
                                  pick: (n: number) => number = () => 0):
    Promise<ApiMoveRecord | null> {
  const winning = await client.best(state.board, state.variant, state.mode);
  if (winning.length > 0) {
    return winning[pick(winning.length)];
  }
  const any = await client.options(state.board, state.variant, state.mode);
  return any.length > 0 ? any[pick(any.length)].move : null;
}

/** One full round: human option, engine answer, fresh human options. */
export async function playTurn(client: Client, state: GameState,
                               option: OptionRecord,
                               pick: (n: number) => number = () => 0):
    Promise<TurnOutcome> {
  let current = applyHuman(state, option);
  if (!historyConsistent(current)) {
    throw new Error("history no longer replays to the current board");
  }
  const reply = await engineReply(client, current, pick);
  const nextOptions = reply === null ? [] : await client.options(
    reply.resultBoard, current.variant, current.mode);
  current = applyEngine(current, reply, nextOptions);
  if (!historyConsistent(current)) {
    throw new Error("history no longer replays to the current board");
  }
  return { state: current, engineMove: reply };
}
