/** Walkability side panel model: the ws gauge plus four indicator bars. */

import type { RoutePayload } from './types.js';

export interface IndicatorBar {
  kind: string;
  /** average capped count, displayed on the bar */
  c: number;
  /** weight, displayed next to the bar */
  w: number;
  /** bar fill as a fraction of tau, in [0, 1] */
  fill: number;
}

export interface PanelModel {
  ws: number;
  wsPercent: number;
  tau: number;
  bars: IndicatorBar[];
  /** formatted sum of weights; must read "1.0" for any valid payload */
  weightTotalLabel: string;
  flags: string[];
}

export function computePanelModel(payload: RoutePayload): PanelModel {
  const { ws, tau, indicators, flags } = payload.walkability;
  const weightTotal = indicators.reduce((sum, i) => sum + i.w, 0);
  return {
    ws,
    wsPercent: Math.round(ws * 100),
    tau,
    bars: indicators.map((i) => ({
      kind: i.kind,
      c: i.c,
      w: i.w,
      fill: Math.min(1, Math.max(0, i.c / tau)),
    })),
    weightTotalLabel: weightTotal.toFixed(1),
    flags: [...flags],
  };
}
