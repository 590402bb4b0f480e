/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_restoration_free: (a: number, b: number) => void;
export const basin_map: (a: number, b: number, c: number) => [number, number, number, number];
export const phi_grid: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
export const restoration_clean: (a: number) => [number, number];
export const restoration_energies: (a: number) => [number, number];
export const restoration_iterations: (a: number) => number;
export const restoration_noisy: (a: number) => [number, number];
export const restoration_psnr_noisy: (a: number) => number;
export const restoration_psnr_restored: (a: number) => number;
export const restoration_restored: (a: number) => [number, number];
export const restoration_size: (a: number) => number;
export const restore_squares: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
export const toy_trajectory: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number, number];
export const __externref_table_alloc: () => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
