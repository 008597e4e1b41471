/* Copyright 2026 The plabic authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the plabic network toolkit: planar bicolored perfect networks
 * in the disk, boundary measurement, edge vector systems with geometric
 * signatures, KP soliton data and the KP divisor on the dual reducible curve,
 * plus the Postnikov moves and reductions.
 *
 * All functions return PLABIC_OK on success. On failure, a human-readable
 * message is available from plabic_last_error() until the next call on the
 * same thread. Strings returned through char** are heap-allocated JSON (or
 * CSV where noted) and must be released with plabic_string_free().
 */
#ifndef PLABIC_H
#define PLABIC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct plabic_network plabic_network;

typedef enum plabic_status {
    PLABIC_OK = 0,
    PLABIC_ERR_PARSE = 1,    /* malformed input (JSON, numbers, flags) */
    PLABIC_ERR_INVALID = 2,  /* network violates the validity contract */
    PLABIC_ERR_FAILED = 3,   /* an invariant or verification check failed */
    PLABIC_ERR_ARG = 4       /* bad argument (unknown name, out of range) */
} plabic_status;

const char* plabic_last_error(void);
void plabic_string_free(char* s);

/* --- network construction -------------------------------------------------- */

/* Graph JSON: {"n":.., "boundary":[..], "vertices":[{"id","color","x","y"}],
 * "edges":[{"tail","head","weight"}]}; weights and coordinates are decimal or
 * "p/q" strings. */
plabic_status plabic_network_parse(const char* json, plabic_network** out);

/* Built-in example networks: gr13_tp (weights w2,w3), gr24_s34 (w13,w23,w24),
 * gr24_tp (w13,w14,w23,w24), gr25_tp (6 weights), gr23_tp (w13,w23),
 * gr12_pocket (p,q), gr12_cyclic (p,q,s). weights_csv may be NULL for the
 * defaults. */
plabic_status plabic_network_builtin(const char* name, const char* weights_csv,
                                     plabic_network** out);

/* Replaces the edge weights in input order with the given positive rationals. */
plabic_status plabic_network_reweight(const plabic_network* net, const char* weights_csv,
                                      plabic_network** out);

plabic_status plabic_network_to_json(const plabic_network* net, char** json);
void plabic_network_free(plabic_network* net);

/* Le-diagram JSON: {"k":..,"n":..,"pivots":[..],
 * "boxes":[{"row":r,"col":j,"weight":"p/q"}]} */
plabic_status plabic_build_le(const char* diagram_json, plabic_network** out);

/* --- structure -------------------------------------------------------------- */

/* Validation report: {"ok":bool,"issues":[{"clause","detail"}]}. Returns
 * PLABIC_OK whether or not the network is valid. */
plabic_status plabic_validate(const plabic_network* net, char** report_json);

plabic_status plabic_faces(const plabic_network* net, char** json);

/* All perfect orientations with their source sets (capped when cap > 0). */
plabic_status plabic_orientations(const plabic_network* net, int cap, char** json);

/* Candidate move sites by vertex ids. */
plabic_status plabic_find_sites(const plabic_network* net, char** json);

/* --- measurement and vectors ------------------------------------------------ */

/* ray: either NULL (deterministic generic choice) or "p/q" giving the
 * direction (1, p/q). */
plabic_status plabic_measure(const plabic_network* net, const char* ray, char** json);
plabic_status plabic_vectors(const plabic_network* net, const char* ray, char** json);
plabic_status plabic_signature(const plabic_network* net, const char* ray, char** json);

/* --- soliton and divisor ----------------------------------------------------- */

/* kappa_csv: n strictly increasing rationals. Emits the Sato data, the divisor
 * points with oval memberships and the curve skeleton. t0 = "auto" or a
 * rational x0. */
plabic_status plabic_divisor(const plabic_network* net, const char* kappa_csv, const char* ray,
                             const char* t0, char** json);

/* tau/u samples on an x-grid at fixed (y,t) plus the Sato roots:
 * {"sato":[..],"grid":[{"x","tau","u"},..]}. times_csv = "y,t". */
plabic_status plabic_soliton(const plabic_network* net, const char* kappa_csv,
                             const char* times_csv, double x_min, double x_max, int samples,
                             char** json);

/* --- moves -------------------------------------------------------------------- */

/* kind: M1|M2|M3-insert|M3-remove|R1|R2|R3|unR1|sum|defrost.
 * site_csv: vertex ids (M1: four; M2/R1/R2: two; M3-remove/R3: one;
 * M3-insert: tail,head ids of the edge; unR1: tail,head; defrost: label j).
 * params_csv: move parameters (unR1: p,q; M3-insert: color,t; sum: mode[,gap]).
 * other: second network for sum, else NULL. */
plabic_status plabic_move(const plabic_network* net, const char* kind, const char* site_csv,
                          const char* params_csv, const plabic_network* other,
                          plabic_network** result, char** delta_json);

/* --- verification --------------------------------------------------------------- */

/* Runs the invariant suite (validation, dual-method vectors, face-signature
 * parity, minor signs, oval counts, divisor invariance, move checks).
 * Returns PLABIC_ERR_FAILED when any line fails; the report lists each line. */
plabic_status plabic_verify(const plabic_network* net, unsigned long seed, char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PLABIC_H */
