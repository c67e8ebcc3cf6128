/** Wire types for the four walkrag service endpoints. */

export interface PayloadInstruction {
  kind: string;
  text: string;
  distance_m: number;
}

export interface PayloadIndicator {
  kind: string;
  c: number;
  w: number;
}

export interface PayloadPoi {
  name: string;
  category: string;
}

export interface PayloadSegment {
  index: number;
  length_m: number;
  pois: PayloadPoi[];
}

export interface RoutePayload {
  payload_version: number;
  origin: string;
  destination: string;
  instructions: PayloadInstruction[];
  walkability: {
    ws: number;
    tau: number;
    indicators: PayloadIndicator[];
    flags: string[];
  };
  segments: PayloadSegment[];
}

export interface PassageOut {
  id: string;
  text: string;
}

export interface MessageResponse {
  answer: string;
  intent_kind: 'spatial' | 'information';
  payload?: RoutePayload;
  passages?: PassageOut[];
  grounded?: boolean;
  error_flag?: string;
}

export interface PoiFeature {
  type: 'Feature';
  geometry: { type: 'Point'; coordinates: [number, number] };
  properties: { name: string; category: string; segment: number };
}

export interface RouteView {
  payload: RoutePayload;
  geometry: { type: 'LineString'; coordinates: [number, number][] };
  pois: { type: 'FeatureCollection'; features: PoiFeature[] };
}

export interface HealthResponse {
  status: string;
  corpus_size: number;
  graph_nodes: number;
}

export interface ApiError {
  error_code: string;
  message: string;
}
