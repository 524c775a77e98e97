/* petrel - hardened PE/COFF and Terse Executable image loader
 *
 * Copyright (c) 2026, the petrel authors. All rights reserved.
 * SPDX-License-Identifier: BSD-2-Clause
 */

#ifndef PETREL_H
#define PETREL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PETREL_API __declspec(dllexport)
#else
#define PETREL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Status codes. PETREL_OK means success; every other value names the first
 * model predicate or API contract that failed. Codes are stable across
 * releases of the same major version.
 */
#define PETREL_OK 0

/* Header verification */
#define PETREL_E_UNKNOWN_FORMAT 1
#define PETREL_E_BAD_MAGIC 2
#define PETREL_E_HEADER_OUT_OF_BOUNDS 3
#define PETREL_E_MISALIGNED_HEADER_OFFSET 4
#define PETREL_E_BAD_OPTIONAL_MAGIC 5
#define PETREL_E_SIZE_OF_HEADERS_INVALID 6
#define PETREL_E_SECTION_COUNT_ZERO 7
#define PETREL_E_SECTION_COUNT_TOO_LARGE 8
#define PETREL_E_SECTION_ALIGNMENT_NOT_POW2 9
#define PETREL_E_DOS_STUB_BEFORE_TE 10
#define PETREL_E_TE_STRIPPED_SIZE_INVALID 11
#define PETREL_E_MACHINE_UNSUPPORTED 12
#define PETREL_E_FILE_TOO_LARGE 13
#define PETREL_E_ARITHMETIC_OVERFLOW 14

/* Section table verification */
#define PETREL_E_SECTION_UNSORTED 15
#define PETREL_E_SECTION_NOT_CONTIGUOUS 16
#define PETREL_E_SECTION_OVERLAPS_IMAGE 17
#define PETREL_E_SIZE_OF_IMAGE_TOO_SMALL 18
#define PETREL_E_SECTION_RAW_OUT_OF_FILE 19
#define PETREL_E_SECTION_RAW_IN_HEADERS 20

/* Relocation directory verification */
#define PETREL_E_RELOC_DIR_MISALIGNED 21
#define PETREL_E_RELOC_DIR_OUT_OF_IMAGE 22
#define PETREL_E_BLOCK_SIZE_INVALID 23
#define PETREL_E_UNSUPPORTED_RELOC_TYPE 24
#define PETREL_E_TARGET_OUT_OF_IMAGE 25
#define PETREL_E_TARGET_MISALIGNED 26
#define PETREL_E_TARGET_OVERLAPS_RELOC_DIR 27

/* Loading and relocation */
#define PETREL_E_DESTINATION_TOO_SMALL 28
#define PETREL_E_HEADER_LOAD_CONFLICT 29
#define PETREL_E_HEADER_LOAD_UNSUPPORTED 30
#define PETREL_E_OUT_OF_BOUNDS 31
#define PETREL_E_MISALIGNED 32
#define PETREL_E_RELOCS_STRIPPED 33
#define PETREL_E_RUNTIME_VALUE_MISMATCH 34
#define PETREL_E_BOOKKEEPING_MISMATCH 35

/* Hashing */
#define PETREL_E_HASH_OVERLAP_REFUSED 36
#define PETREL_E_TE_NOT_HASHABLE 37
#define PETREL_E_CERT_TABLE_MALFORMED 38

/* API usage */
#define PETREL_E_INVALID_ARGUMENT 39

/* Machine classes selecting the alignment cap and accepted machine codes. */
#define PETREL_MACHINE_CLASS_IA32 0
#define PETREL_MACHINE_CLASS_X64 1
#define PETREL_MACHINE_CLASS_ARM 2
#define PETREL_MACHINE_CLASS_AARCH64 3
#define PETREL_MACHINE_CLASS_RISCV64 4

/* Image formats. */
#define PETREL_FORMAT_TE 1
#define PETREL_FORMAT_PE32 2
#define PETREL_FORMAT_PE32PLUS 3

/* Verification stages, reported alongside each violation. */
#define PETREL_STAGE_HEADERS 1
#define PETREL_STAGE_SECTIONS 2
#define PETREL_STAGE_LOAD 3
#define PETREL_STAGE_RELOCATION 4
#define PETREL_STAGE_HASHING 5

/* petrel_load flags */
#define PETREL_LOAD_HEADERS 0x1u
#define PETREL_LOAD_BOOKKEEPING 0x2u

/* Runtime re-relocation policies */
#define PETREL_RUNTIME_STRICT 1
#define PETREL_RUNTIME_SKIP_CHANGED 2

/* Hash plan modes */
#define PETREL_HASH_AUTHENTICODE 1
#define PETREL_HASH_LINEAR 2

/* Hash plan range kinds and skip reasons */
#define PETREL_RANGE_HEADER_CHUNK 1
#define PETREL_RANGE_SECTION_DATA 2
#define PETREL_RANGE_TRAILING 3
#define PETREL_SKIP_CHECKSUM_FIELD 10
#define PETREL_SKIP_SECDIR_ENTRY 11
#define PETREL_SKIP_CERT_TABLE 12
#define PETREL_SKIP_RAW_GAP 13

/*
 * Target configuration. The machine class fixes the maximum fundamental
 * alignment (4 bytes for IA32, 8 otherwise) and the accepted machine codes.
 * ARM MOV32T relocations are opt-in; RISC-V relocations are reserved and
 * currently never enabled.
 */
typedef struct petrel_config {
    uint32_t machine_class;
    uint8_t allow_arm_mov32t;
    uint8_t allow_riscv_relocs;
    uint8_t strict_section_layout;
    uint8_t refuse_hash_overlap;
    uint8_t load_headers_default;
    uint8_t reserved_[3];
} petrel_config;

/* One verification failure: status code, stage, and the file or image
 * offset the check applies to (UINT64_MAX when no offset is meaningful). */
typedef struct petrel_violation {
    int32_t code;
    int32_t stage;
    uint64_t offset;
} petrel_violation;

#define PETREL_NO_OFFSET UINT64_MAX

/*
 * A verified image: the raw file bytes plus the parsed, validated header
 * and section facts. Opaque; create with petrel_image_open, release with
 * petrel_image_close. The raw bytes are copied and never mutated.
 */
typedef struct petrel_image petrel_image;

/*
 * A loaded image bound to a caller-provided destination buffer. Opaque;
 * create with petrel_load, release with petrel_loaded_close (the
 * destination buffer itself remains owned by the caller and must outlive
 * the handle).
 */
typedef struct petrel_loaded petrel_loaded;

typedef struct petrel_image_info {
    uint32_t format;
    uint64_t file_size;
    uint64_t size_of_headers;
    uint64_t size_of_image;
    uint64_t section_alignment;
    uint64_t section_table_offset;
    uint32_t num_sections;
    uint8_t has_reloc_dir;
    uint8_t relocs_stripped;
    uint32_t reloc_dir_va;
    uint32_t reloc_dir_size;
    uint64_t preferred_base;
    uint32_t entry_point_rva;
    uint32_t te_stripped_offset;
    uint16_t machine;
    uint16_t subsystem;
    uint8_t has_cert_table;
    uint64_t cert_table_offset;
    uint64_t cert_table_size;
} petrel_image_info;

typedef struct petrel_section_info {
    uint8_t name[8];
    uint32_t virtual_size;
    uint32_t virtual_address;
    uint32_t raw_size;
    uint32_t raw_offset;
    uint32_t characteristics;
    uint8_t discardable;
} petrel_section_info;

typedef struct petrel_reloc_summary {
    uint64_t block_count;
    uint64_t entry_count;
    uint64_t absolute_count;
    uint64_t highlow_count;
    uint64_t dir64_count;
    uint64_t arm_mov32t_count;
} petrel_reloc_summary;

typedef struct petrel_hash_range {
    uint64_t start; /* inclusive raw file offset */
    uint64_t end;   /* exclusive raw file offset */
    int32_t kind;   /* PETREL_RANGE_* for plan ranges, PETREL_SKIP_* for skips */
} petrel_hash_range;

/* Ordered hash input callback; return PETREL_OK to continue. */
typedef int32_t (*petrel_hash_update)(void* user, const uint8_t* data, size_t size);

PETREL_API const char* petrel_version(void);

/* Short identifier for a status code, e.g. "SectionUnsorted". */
PETREL_API const char* petrel_status_name(int32_t code);

/* One-sentence description of a status code. */
PETREL_API const char* petrel_status_describe(int32_t code);

/* Fill *cfg with the defaults for a machine class: strict section layout,
 * optional relocation types disabled, hash overlap tolerated. */
PETREL_API void petrel_config_default(petrel_config* cfg, uint32_t machine_class);

/* Maximum fundamental alignment implied by the configuration (4 or 8). */
PETREL_API uint32_t petrel_config_a_max(const petrel_config* cfg);

/*
 * Parse and verify the raw file headers and section table. On success
 * returns PETREL_OK and stores a new image handle in *out_image. On
 * rejection returns the first violation code and, when viol/viol_cap are
 * given, records up to viol_cap violations with *viol_count set to the
 * number found. The input bytes are copied; the caller may free them.
 */
PETREL_API int32_t petrel_image_open(const uint8_t* data, size_t size,
                                     const petrel_config* cfg,
                                     petrel_image** out_image,
                                     petrel_violation* viol, size_t viol_cap,
                                     size_t* viol_count);

PETREL_API void petrel_image_close(petrel_image* image);

PETREL_API int32_t petrel_image_get_info(const petrel_image* image,
                                         petrel_image_info* info);

PETREL_API int32_t petrel_image_get_section(const petrel_image* image,
                                            uint32_t index,
                                            petrel_section_info* info);

/*
 * Run the remaining model checks that require a loaded address space:
 * the relocation directory walk and, when the configuration refuses
 * overlapping raw section data, the hash overlap check. Loads into a
 * temporary buffer internally; the image is not modified.
 */
PETREL_API int32_t petrel_image_validate(const petrel_image* image,
                                         petrel_violation* viol, size_t viol_cap,
                                         size_t* viol_count);

/* Exact destination size required by petrel_load. */
PETREL_API uint64_t petrel_image_size(const petrel_image* image);

/*
 * Load the image into dest (dest_size must equal petrel_image_size).
 * The destination is fully zero-initialized before section data is
 * copied, so every byte not covered by the file is zero. Flags:
 * PETREL_LOAD_HEADERS copies the raw headers to image offset 0 (invalid
 * for TE images and for images whose first section starts at 0);
 * PETREL_LOAD_BOOKKEEPING records original relocation target values on
 * the first relocation so the image can later be re-relocated safely.
 */
PETREL_API int32_t petrel_load(const petrel_image* image, uint8_t* dest,
                               size_t dest_size, uint32_t flags,
                               petrel_loaded** out_loaded);

PETREL_API void petrel_loaded_close(petrel_loaded* loaded);

PETREL_API uint64_t petrel_loaded_base(const petrel_loaded* loaded);

/*
 * Verify the relocation directory against the model and cache the walk.
 * Called implicitly by petrel_loaded_relocate. The summary out-param is
 * optional.
 */
PETREL_API int32_t petrel_loaded_verify_relocs(petrel_loaded* loaded,
                                               petrel_reloc_summary* summary);

/*
 * Rebase the loaded image. Fails with PETREL_E_RELOCS_STRIPPED when the
 * image carries no relocation information and new_base differs from the
 * preferred address; success is never reported unless every fixup was
 * applied. The relocation directory bytes themselves are never modified.
 */
PETREL_API int32_t petrel_loaded_relocate(petrel_loaded* loaded, uint64_t new_base);

/*
 * Re-relocate an already relocated image using the bookkeeping records.
 * Targets whose current value no longer matches the expected relocated
 * value are an error under PETREL_RUNTIME_STRICT (with the offending
 * image offset in *out_mismatch_offset) or skipped and counted under
 * PETREL_RUNTIME_SKIP_CHANGED.
 */
PETREL_API int32_t petrel_loaded_runtime_relocate(petrel_loaded* loaded,
                                                  uint64_t new_base,
                                                  uint32_t policy,
                                                  uint64_t* out_mismatch_offset,
                                                  uint64_t* out_skipped);

/* Zero the memory of every discardable section; returns the count. */
PETREL_API uint32_t petrel_loaded_discard(petrel_loaded* loaded);

/*
 * Bounds- and alignment-checked access into the loaded image. On success
 * stores the address of image offset `offset` and the number of bytes
 * remaining to the end of the image, so callers can never overrun.
 */
PETREL_API int32_t petrel_loaded_access(const petrel_loaded* loaded,
                                        uint64_t offset, uint64_t size,
                                        uint64_t align, const uint8_t** out_ptr,
                                        uint64_t* out_remaining);

/*
 * Compute the ordered signature-hash byte plan over the raw file.
 * Authenticode mode emits the three header chunks (checksum field and
 * security-directory entry skipped), section raw data in ascending file
 * offset order, then trailing data excluding the certificate table.
 * Linear mode emits one range from file start to the certificate table
 * (or end of file). *out_pad is the number of virtual zero bytes to feed
 * after the last range (8-byte quantum rule; zero for signed files).
 */
PETREL_API int32_t petrel_hash_plan(const petrel_image* image, int32_t mode,
                                    petrel_hash_range* ranges, size_t range_cap,
                                    size_t* range_count,
                                    petrel_hash_range* skips, size_t skip_cap,
                                    size_t* skip_count, uint32_t* out_pad);

/*
 * Feed the plan's byte ranges to `update` in order, one call per range,
 * followed by one call of pad zeros when the plan requires padding.
 * The cipher is entirely caller-owned; any digest can be plugged in.
 */
PETREL_API int32_t petrel_hash_feed(const petrel_image* image, int32_t mode,
                                    petrel_hash_update update, void* user);

#ifdef __cplusplus
}
#endif

#endif /* PETREL_H */
