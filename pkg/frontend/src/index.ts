/**
 * Embedding layer for the agentloop simulation library.
 *
 * Scenarios run out of process through the agentloop CLI and come back as
 * flat per-tick records ready for data-frame or plotting work::
 *
 *   import { runScenario } from "agentloop-embed";
 *   const rows = runScenario("opinion", { ticks: 20, bias: 5, seed: 42 });
 *   // [{ tick: 1, trueCount: 87, falseCount: 13 }, ...]
 *
 * The layer talks to the core only via its public command line and JSON
 * formats, so any agentloop installation reachable as `python3 -m agentloop`
 * (override with the AGENTLOOP_PYTHON environment variable or the `python`
 * option) works unchanged.  Every call runs an isolated environment; calls
 * are independent and reproducible for fixed parameters.
 */

import { execFileSync } from "node:child_process";

import {
  OpinionPayload,
  RunRecord,
  TracePayload,
  golRecords,
  gridworldRecords,
  opinionRecords,
  roomRecords,
} from "./records.js";

export type { RunRecord } from "./records.js";

/** Thrown when the scenario name is not one of the bundled scenarios. */
export class UnknownScenario extends Error {
  constructor(name: string) {
    super(`unknown scenario '${name}'`);
    this.name = "UnknownScenario";
  }
}

/** Thrown when a parameter is missing, mistyped, or out of range. */
export class InvalidParams extends Error {
  readonly key: string;

  constructor(key: string, reason: string) {
    super(`invalid parameter '${key}': ${reason}`);
    this.name = "InvalidParams";
    this.key = key;
  }
}

export interface ScenarioParams {
  /** Iterations to run; non-negative integer, default 20. */
  ticks?: number;
  /** Random seed; integer, default 0. */
  seed?: number;
  /** True-announcement bias; non-negative number, opinion scenario only. */
  bias?: number;
}

export interface RunOptions {
  /** Python executable hosting the agentloop package (default `python3`). */
  python?: string;
}

const SCENARIOS = ["gol", "gridworld", "opinion", "room"] as const;

export type ScenarioName = (typeof SCENARIOS)[number];

/** Names of the runnable scenarios, sorted. */
export function listScenarios(): string[] {
  return [...SCENARIOS];
}

function requireInteger(params: ScenarioParams, key: "ticks" | "seed", minimum?: number): void {
  const value = params[key];
  if (value === undefined) return;
  if (typeof value !== "number" || !Number.isInteger(value)) {
    throw new InvalidParams(key, "must be an integer");
  }
  if (minimum !== undefined && value < minimum) {
    throw new InvalidParams(key, `must be at least ${minimum}`);
  }
}

function validateParams(name: string, params: ScenarioParams): void {
  const allowed = new Set<string>(["ticks", "seed"]);
  if (name === "opinion") allowed.add("bias");
  for (const key of Object.keys(params)) {
    if (!allowed.has(key)) {
      throw new InvalidParams(key, `not a parameter of the '${name}' scenario`);
    }
  }
  requireInteger(params, "ticks", 0);
  requireInteger(params, "seed");
  if (params.bias !== undefined) {
    if (typeof params.bias !== "number" || !Number.isFinite(params.bias) || params.bias < 0) {
      throw new InvalidParams("bias", "must be a non-negative number");
    }
  }
}

function invokeCli(name: string, params: ScenarioParams, options: RunOptions): string {
  const python = options.python ?? process.env.AGENTLOOP_PYTHON ?? "python3";
  const args = ["-m", "agentloop", "run", "--scenario", name, "--format", "json"];
  if (params.ticks !== undefined) args.push("--ticks", String(params.ticks));
  if (params.seed !== undefined) args.push("--seed", String(params.seed));
  if (params.bias !== undefined) args.push("--bias", String(params.bias));
  try {
    return execFileSync(python, args, { encoding: "utf8", maxBuffer: 256 * 1024 * 1024 });
  } catch (error) {
    const stderr = (error as { stderr?: string }).stderr ?? "";
    throw new Error(`agentloop CLI failed: ${stderr.trim() || String(error)}`);
  }
}

/**
 * Run a bundled scenario and return one flat record per tick.
 *
 * Opinion rows carry `trueCount`/`falseCount`, exactly the per-tick stats
 * the CLI and the HTTP service report for the same parameters.
 */
export function runScenario(name: string, params: ScenarioParams = {}, options: RunOptions = {}): RunRecord[] {
  if (!(SCENARIOS as readonly string[]).includes(name)) {
    throw new UnknownScenario(name);
  }
  validateParams(name, params);
  const output = invokeCli(name, params, options);
  if (name === "opinion") {
    return opinionRecords(JSON.parse(output) as OpinionPayload);
  }
  const trace = JSON.parse(output) as TracePayload;
  if (name === "room") return roomRecords(trace);
  if (name === "gol") return golRecords(trace);
  return gridworldRecords(trace);
}
