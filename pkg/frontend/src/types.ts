// Payload shapes of the workbench HTTP API (schema version 1).

export type Mode = 1 | 2;

export interface CellPayload {
  input: string;
  value: string; // "a/b"
}

export interface KmapPayload {
  row_vars: number[];
  col_vars: number[];
  row_labels: string[];
  col_labels: string[];
}

export interface DemandCell {
  input: string;
  mode: Mode;
}

export interface SessionState {
  schema: number;
  session_id: string;
  demand_remaining: DemandCell[];
  expr: string;
  accepted_terms: CandidatePayload[];
  complete: boolean;
}

export interface SessionPayload extends SessionState {
  n: number;
  cells: CellPayload[];
  kmap?: KmapPayload;
}

export interface CandidatePayload {
  shape: string;
  cubes: string[];
  gates: string[];
  expr: string;
  rule: string;
  id?: string | null;
  newly_covered?: number;
}

export interface TryGroupPayload {
  schema: number;
  candidates: CandidatePayload[];
  note?: string;
}

export interface HintPayload {
  schema: number;
  hints: CandidatePayload[];
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}
