/**
 * Flattening of scenario output into per-tick rows for tabular analysis.
 *
 * The opinion scenario already arrives as per-tick counts; trace-shaped
 * scenarios are reduced to a few stable numeric columns.  Within one run the
 * column set is constant.
 */

export interface RunRecord {
  tick: number;
  [column: string]: number | boolean;
}

interface AgentEntry {
  agentId: string;
  logEvents: string[];
}

interface TraceTick {
  tick: number;
  perAgent: AgentEntry[];
  stateAfter: Record<string, unknown>;
}

export interface TracePayload {
  seed: number;
  ticks: TraceTick[];
}

export interface OpinionPayload {
  ticks: number;
  bias: number;
  seed: number;
  perTick: { tick: number; trueCount: number; falseCount: number }[];
}

export function opinionRecords(payload: OpinionPayload): RunRecord[] {
  return payload.perTick.map((row) => ({
    tick: row.tick,
    trueCount: row.trueCount,
    falseCount: row.falseCount,
  }));
}

export function roomRecords(payload: TracePayload): RunRecord[] {
  return payload.ticks.map((record) => {
    const state = record.stateAfter as { door: { locked: boolean }; requests: unknown[] };
    return {
      tick: record.tick,
      doorLocked: state.door.locked,
      requestCount: state.requests.length,
    };
  });
}

export function golRecords(payload: TracePayload): RunRecord[] {
  return payload.ticks.map((record) => {
    const grid = (record.stateAfter as { grid: boolean[][] }).grid;
    let alive = 0;
    for (const row of grid) {
      for (const cell of row) {
        if (cell) alive += 1;
      }
    }
    return { tick: record.tick, aliveCount: alive };
  });
}

export function gridworldRecords(payload: TracePayload): RunRecord[] {
  return payload.ticks.map((record) => {
    const agents = (record.stateAfter as { agents: Record<string, { coins: number; health: number }> }).agents;
    let totalCoins = 0;
    let totalHealth = 0;
    for (const stats of Object.values(agents)) {
      totalCoins += stats.coins;
      totalHealth += stats.health;
    }
    let bankruptcies = 0;
    for (const entry of record.perAgent) {
      for (const line of entry.logEvents) {
        if (line.includes("bankruptcy")) bankruptcies += 1;
      }
    }
    return { tick: record.tick, totalCoins, totalHealth, bankruptcies };
  });
}
