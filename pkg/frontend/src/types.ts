export type Variant = "single" | "multi";
export type Mode = "fixed" | "open";
export type Player = "human" | "engine";

export interface HopRecord {
  from: number;
  over: number;
  to: number;
}

/** A move as the service reports it: hops in the coordinates of the
 * board the move was generated for, the resulting board text, and how
 * far the text origin shifted left (open mode only, always <= 0). */
export interface ApiMoveRecord {
  hops: HopRecord[];
  resultBoard: string;
  offsetDelta: number;
}

export interface OptionRecord {
  move: ApiMoveRecord;
  resultBoard: string;
  offsetDelta: number;
  grundy: number;
  isP: boolean;
}

export interface GrundyInfo {
  grundy: number;
  isP: boolean;
}

export interface HistoryEntry {
  /** board text before the move, in whose coordinates the hops live */
  board: string;
  mover: Player;
  move: ApiMoveRecord;
}

export type Phase = "editing" | "playing" | "over";

export interface GameState {
  phase: Phase;
  board: string;
  variant: Variant;
  mode: Mode;
  turn: Player;
  initialBoard: string;
  history: HistoryEntry[];
  /** legal options for the side to move, straight from the service */
  options: OptionRecord[];
  /** hops committed so far while entering a multihop chain */
  chain: HopRecord[];
  /** show per-option nim-values (teaching mode) */
  overlay: boolean;
  loser: Player | null;
  /** monotonically increasing request tag; stale responses are dropped */
  seq: number;
}
