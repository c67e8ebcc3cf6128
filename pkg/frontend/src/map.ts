/** Map rendering model. Fixture mode draws on a blank canvas grid — no tile
 * service involved — so everything here is computable and testable offline.
 * The projection is a padded equirectangular fit of the route bounding box;
 * vertex counts are preserved exactly (one pixel vertex per served GeoJSON
 * vertex, one marker per served POI feature). */

import type { RouteView } from './types.js';

export interface MapMarker {
  x: number;
  y: number;
  name: string;
  category: string;
  segment: number;
}

export interface MapModel {
  width: number;
  height: number;
  polyline: Array<[number, number]>;
  markers: MapMarker[];
  gridStepPx: number;
  origin: [number, number];
  destination: [number, number];
}

const PADDING_FRACTION = 0.12;
const GRID_STEP_PX = 48;

export function computeMapModel(view: RouteView, width: number, height: number): MapModel {
  const coords = view.geometry.coordinates;
  const poiCoords = view.pois.features.map((f) => f.geometry.coordinates);
  const all = coords.concat(poiCoords);
  if (all.length === 0) {
    return {
      width,
      height,
      polyline: [],
      markers: [],
      gridStepPx: GRID_STEP_PX,
      origin: [0, 0],
      destination: [0, 0],
    };
  }

  const lons = all.map((c) => c[0]);
  const lats = all.map((c) => c[1]);
  let minLon = Math.min(...lons);
  let maxLon = Math.max(...lons);
  let minLat = Math.min(...lats);
  let maxLat = Math.max(...lats);
  // degenerate extents (single point) still need a nonzero span
  if (maxLon - minLon < 1e-9) {
    minLon -= 5e-4;
    maxLon += 5e-4;
  }
  if (maxLat - minLat < 1e-9) {
    minLat -= 5e-4;
    maxLat += 5e-4;
  }

  const padX = width * PADDING_FRACTION;
  const padY = height * PADDING_FRACTION;
  const sx = (width - 2 * padX) / (maxLon - minLon);
  const sy = (height - 2 * padY) / (maxLat - minLat);

  const project = ([lon, lat]: [number, number]): [number, number] => [
    padX + (lon - minLon) * sx,
    height - padY - (lat - minLat) * sy, // screen y grows downward
  ];

  const polyline = coords.map(project);
  const markers = view.pois.features.map((f) => {
    const [x, y] = project(f.geometry.coordinates);
    return { x, y, ...f.properties };
  });

  return {
    width,
    height,
    polyline,
    markers,
    gridStepPx: GRID_STEP_PX,
    origin: polyline.length ? polyline[0] : [0, 0],
    destination: polyline.length ? polyline[polyline.length - 1] : [0, 0],
  };
}

/** Draw the model onto a 2D context: grid, route, endpoint dots, POI pins. */
export function drawMap(ctx: CanvasRenderingContext2D, model: MapModel): void {
  ctx.clearRect(0, 0, model.width, model.height);

  ctx.strokeStyle = '#e3e7ec';
  ctx.lineWidth = 1;
  for (let x = 0; x <= model.width; x += model.gridStepPx) {
    ctx.beginPath();
    ctx.moveTo(x, 0);
    ctx.lineTo(x, model.height);
    ctx.stroke();
  }
  for (let y = 0; y <= model.height; y += model.gridStepPx) {
    ctx.beginPath();
    ctx.moveTo(0, y);
    ctx.lineTo(model.width, y);
    ctx.stroke();
  }

  if (model.polyline.length > 1) {
    ctx.strokeStyle = '#2563eb';
    ctx.lineWidth = 3;
    ctx.beginPath();
    ctx.moveTo(model.polyline[0][0], model.polyline[0][1]);
    for (const [x, y] of model.polyline.slice(1)) {
      ctx.lineTo(x, y);
    }
    ctx.stroke();

    for (const [point, color] of [
      [model.origin, '#16a34a'],
      [model.destination, '#dc2626'],
    ] as const) {
      ctx.fillStyle = color;
      ctx.beginPath();
      ctx.arc(point[0], point[1], 6, 0, Math.PI * 2);
      ctx.fill();
    }
  }

  ctx.fillStyle = '#9333ea';
  for (const marker of model.markers) {
    ctx.beginPath();
    ctx.arc(marker.x, marker.y, 5, 0, Math.PI * 2);
    ctx.fill();
  }
}

/** Nearest marker within `radiusPx` of a canvas point, for click handling. */
export function hitTestMarker(
  model: MapModel,
  x: number,
  y: number,
  radiusPx = 10,
): MapMarker | null {
  let best: MapMarker | null = null;
  let bestDist = radiusPx;
  for (const marker of model.markers) {
    const d = Math.hypot(marker.x - x, marker.y - y);
    if (d <= bestDist) {
      best = marker;
      bestDist = d;
    }
  }
  return best;
}
