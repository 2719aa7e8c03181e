/* tslint:disable */
/* eslint-disable */

/**
 * Result of fitting the spray model to simulated droplets.
 */
export class FitView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly a: number;
    readonly b: number;
    readonly footprint_radius: number;
    readonly h: number;
    readonly iterations: number;
    readonly residual_rms: number;
}

/**
 * A planned and evaluated path.
 */
export class PlanView {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly covered_fraction: number;
    readonly covered_fraction_safe: number;
    readonly line_count: number;
    readonly line_spacing: number;
    readonly max_incursion: number;
    readonly path_length: number;
    readonly safety_violations: number;
    readonly svg: string;
}

/**
 * Samples `count` droplets from the model (A, B, h) with Gaussian height
 * noise `sigma`, fits the model back and reports the footprint radius at
 * `altitude`.
 */
export function fit_droplets(a: number, b: number, h: number, sigma: number, count: number, altitude: number, seed: bigint): FitView;

/**
 * Plans a path over the field (boundary-safe planner, or the baseline when
 * `baseline` is set), then rasterizes its coverage and audits it.
 */
export function plan(vertices: Float64Array, radius: number, start: Float64Array, end: Float64Array, baseline: boolean): PlanView;

/**
 * Corners of a random convex field as a flat `[x0, y0, x1, y1, ...]` list.
 */
export function random_field(seed: bigint, corners: number, diameter: number): Float64Array;

/**
 * Centroid of the safe (eroded) region, or of the field when nothing is safe.
 */
export function safe_centroid(vertices: Float64Array, radius: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_fitview_free: (a: number, b: number) => void;
    readonly __wbg_planview_free: (a: number, b: number) => void;
    readonly fit_droplets: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number];
    readonly fitview_a: (a: number) => number;
    readonly fitview_b: (a: number) => number;
    readonly fitview_footprint_radius: (a: number) => number;
    readonly fitview_h: (a: number) => number;
    readonly fitview_iterations: (a: number) => number;
    readonly fitview_residual_rms: (a: number) => number;
    readonly plan: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly planview_covered_fraction: (a: number) => number;
    readonly planview_covered_fraction_safe: (a: number) => number;
    readonly planview_line_count: (a: number) => number;
    readonly planview_line_spacing: (a: number) => number;
    readonly planview_max_incursion: (a: number) => number;
    readonly planview_path_length: (a: number) => number;
    readonly planview_safety_violations: (a: number) => number;
    readonly planview_svg: (a: number) => [number, number];
    readonly random_field: (a: bigint, b: number, c: number) => [number, number];
    readonly safe_centroid: (a: number, b: number, c: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
