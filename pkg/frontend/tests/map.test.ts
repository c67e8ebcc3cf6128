import { describe, expect, it } from 'vitest';

import { computeMapModel, hitTestMarker } from '../src/map.js';
import { computePanelModel } from '../src/panel.js';
import { routeView, spatialMessage } from './helpers.js';

describe('map model', () => {
  it('keeps exactly one pixel vertex per served GeoJSON vertex', () => {
    const view = routeView();
    const model = computeMapModel(view, 720, 520);
    expect(model.polyline).toHaveLength(view.geometry.coordinates.length);
  });

  it('keeps one marker per served POI feature, with its name and category', () => {
    const view = routeView();
    const model = computeMapModel(view, 720, 520);
    expect(model.markers).toHaveLength(view.pois.features.length);
    const names = model.markers.map((m) => m.name).sort();
    expect(names).toEqual(view.pois.features.map((f) => f.properties.name).sort());
  });

  it('maps the first and last vertices to the origin/destination markers', () => {
    const view = routeView();
    const model = computeMapModel(view, 720, 520);
    expect(model.origin).toEqual(model.polyline[0]);
    expect(model.destination).toEqual(model.polyline[model.polyline.length - 1]);
  });

  it('projects monotonically: east is right, north is up', () => {
    const view = routeView();
    const model = computeMapModel(view, 720, 520);
    const coords = view.geometry.coordinates;
    for (let i = 0; i < coords.length; i++) {
      for (let j = 0; j < coords.length; j++) {
        if (coords[i][0] > coords[j][0]) {
          expect(model.polyline[i][0]).toBeGreaterThan(model.polyline[j][0]);
        }
        if (coords[i][1] > coords[j][1]) {
          expect(model.polyline[i][1]).toBeLessThan(model.polyline[j][1]);
        }
      }
    }
  });

  it('keeps every projected point inside the canvas', () => {
    const view = routeView();
    const model = computeMapModel(view, 720, 520);
    for (const [x, y] of model.polyline) {
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThanOrEqual(720);
      expect(y).toBeGreaterThanOrEqual(0);
      expect(y).toBeLessThanOrEqual(520);
    }
    for (const marker of model.markers) {
      expect(marker.x).toBeGreaterThanOrEqual(0);
      expect(marker.x).toBeLessThanOrEqual(720);
    }
  });

  it('handles an empty route without markers', () => {
    const model = computeMapModel(
      {
        payload: spatialMessage().payload!,
        geometry: { type: 'LineString', coordinates: [] },
        pois: { type: 'FeatureCollection', features: [] },
      },
      720,
      520,
    );
    expect(model.polyline).toHaveLength(0);
    expect(model.markers).toHaveLength(0);
  });

  it('hit-tests the nearest marker within the radius', () => {
    const view = routeView();
    const model = computeMapModel(view, 720, 520);
    const marker = model.markers[0];
    expect(hitTestMarker(model, marker.x + 3, marker.y - 3)).toBe(marker);
    expect(hitTestMarker(model, marker.x + 300, marker.y + 300)).toBeNull();
  });
});

describe('walkability panel model', () => {
  it('shows four bars whose weights sum to 1.0', () => {
    const payload = spatialMessage().payload!;
    const model = computePanelModel(payload);
    expect(model.bars).toHaveLength(4);
    expect(model.weightTotalLabel).toBe('1.0');
  });

  it('fills bars as c / tau, clamped to [0, 1]', () => {
    const payload = spatialMessage().payload!;
    const model = computePanelModel(payload);
    for (const bar of model.bars) {
      expect(bar.fill).toBeGreaterThanOrEqual(0);
      expect(bar.fill).toBeLessThanOrEqual(1);
      expect(bar.fill).toBeCloseTo(Math.min(1, bar.c / payload.walkability.tau), 10);
    }
  });

  it('reports the gauge as a rounded percentage', () => {
    const payload = spatialMessage().payload!;
    const model = computePanelModel(payload);
    expect(model.wsPercent).toBe(Math.round(payload.walkability.ws * 100));
  });
});
