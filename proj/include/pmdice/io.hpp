// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmdice/field.hpp"

namespace pmdice {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// TNSR: "TNSR" magic, version byte (1), dtype byte (1 = float32 LE,
// 2 = uint8), rank byte (2..4), pad byte (0), rank x uint32 LE dims,
// row-major payload with the last dimension fastest.
struct Tnsr {
    int dtype = 0;
    Dims dims;
    std::vector<float> f32;        // dtype 1
    std::vector<std::uint8_t> u8;  // dtype 2
};

std::vector<std::uint8_t> write_tnsr(const ScalarField& field);   // stored as float32
std::vector<std::uint8_t> write_tnsr(const LabelField& labels);   // stored as uint8
Tnsr read_tnsr(const std::vector<std::uint8_t>& bytes);           // FormatError names the bad field
ScalarField as_scalar(const Tnsr& t);                             // requires dtype 1
LabelField as_labels(const Tnsr& t);                              // requires dtype 2

// Binary PGM (P5), maxval <= 255.
std::vector<std::uint8_t> write_pgm(const LabelField& labels);          // raw class values
std::vector<std::uint8_t> write_pgm_intensity(const ScalarField& img);  // [0,1] -> 0..255
LabelField read_pgm_labels(const std::vector<std::uint8_t>& bytes);
ScalarField read_pgm_intensity(const std::vector<std::uint8_t>& bytes);  // scaled by 1/maxval

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes);
void write_text_file(const std::string& path, const std::string& text);

// Number formatting: short form for console output, full precision for files.
std::string format_short(double v);  // %.6g
std::string format_full(double v);   // %.17g

}  // namespace pmdice
