/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_fitview_free: (a: number, b: number) => void;
export const __wbg_planview_free: (a: number, b: number) => void;
export const fit_droplets: (a: number, b: number, c: number, d: number, e: number, f: number, g: bigint) => [number, number, number];
export const fitview_a: (a: number) => number;
export const fitview_b: (a: number) => number;
export const fitview_footprint_radius: (a: number) => number;
export const fitview_h: (a: number) => number;
export const fitview_iterations: (a: number) => number;
export const fitview_residual_rms: (a: number) => number;
export const plan: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const planview_covered_fraction: (a: number) => number;
export const planview_covered_fraction_safe: (a: number) => number;
export const planview_line_count: (a: number) => number;
export const planview_line_spacing: (a: number) => number;
export const planview_max_incursion: (a: number) => number;
export const planview_path_length: (a: number) => number;
export const planview_safety_violations: (a: number) => number;
export const planview_svg: (a: number) => [number, number];
export const random_field: (a: bigint, b: number, c: number) => [number, number];
export const safe_centroid: (a: number, b: number, c: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
