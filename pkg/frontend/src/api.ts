import type { ApiMoveRecord, GrundyInfo, Mode, OptionRecord, Variant } from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

/** Thin typed client; every game-rule decision stays on the server. */
export class Client {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload.error ?? response.statusText);
    }
    return payload as T;
  }

  async health(): Promise<boolean> {
    const response = await this.fetchImpl(this.baseUrl + "/api/health");
    return response.ok;
  }

  grundy(board: string, variant: Variant, mode: Mode): Promise<GrundyInfo> {
    return this.post<GrundyInfo>("/api/grundy", { board, variant, mode });
  }

  async options(board: string, variant: Variant, mode: Mode): Promise<OptionRecord[]> {
    const payload = await this.post<{ options: OptionRecord[] }>(
      "/api/options", { board, variant, mode });
    return payload.options;
  }

  /** Winning moves; empty when the position has none (grundy zero). */
  async best(board: string, variant: Variant, mode: Mode): Promise<ApiMoveRecord[]> {
    try {
      const payload = await this.post<{ moves: ApiMoveRecord[] }>(
        "/api/best", { board, variant, mode });
      return payload.moves;
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        return [];
      }
      throw error;
    }
  }
}
