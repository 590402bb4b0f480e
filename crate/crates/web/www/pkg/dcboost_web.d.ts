/* tslint:disable */
/* eslint-disable */

export class Restoration {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    clean(): Uint8Array;
    energies(): Float64Array;
    iterations(): number;
    noisy(): Uint8Array;
    psnr_noisy(): number;
    psnr_restored(): number;
    restored(): Uint8Array;
    size(): number;
}

/**
 * Attractor index (0: (2,2), 1: (0,2), 2: (2,0), 3: (0,0), 4: other) for each
 * start of an `n x n` grid over `[0, 3]^2`, row-major with `v` down the rows.
 */
export function basin_map(variant: string, n: number): Uint8Array;

/**
 * Objective on an `n x n` grid over `[lo, hi]^2`, row-major with `v` down the
 * rows.
 */
export function phi_grid(example: string, lo: number, hi: number, n: number): Float64Array;

/**
 * Corrupts the squares image with Cauchy noise of scale `gamma` and restores
 * it with the default parameters for that scale.
 */
export function restore_squares(size: number, gamma: number, seed: number, variant: string): Restoration;

/**
 * Flat `[u, v, phi, lambda]` per iterate, ending with the final point (lambda 0).
 */
export function toy_trajectory(example: string, variant: string, u0: number, v0: number, alpha: number, beta: number, lambda_bar: number): Float64Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_restoration_free: (a: number, b: number) => void;
    readonly basin_map: (a: number, b: number, c: number) => [number, number, number, number];
    readonly phi_grid: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly restoration_clean: (a: number) => [number, number];
    readonly restoration_energies: (a: number) => [number, number];
    readonly restoration_iterations: (a: number) => number;
    readonly restoration_noisy: (a: number) => [number, number];
    readonly restoration_psnr_noisy: (a: number) => number;
    readonly restoration_psnr_restored: (a: number) => number;
    readonly restoration_restored: (a: number) => [number, number];
    readonly restoration_size: (a: number) => number;
    readonly restore_squares: (a: number, b: number, c: number, d: number, e: number) => [number, number, number];
    readonly toy_trajectory: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number, number];
    readonly __externref_table_alloc: () => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
