#pragma once

#include <ostream>
#include <string>

#include "mexneedlet/frame_ops.hpp"
#include "mexneedlet/kernel.hpp"
#include "mexneedlet/needlet.hpp"
#include "mexneedlet/sphere_partition.hpp"
#include "mexneedlet/truncation.hpp"

namespace mexneedlet {

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double v);

/// theta,value,method,t,filter
void write_kernel_csv(std::ostream& os, const KernelProfile& profile);

/// {"j", "a", "b", "cells": [{"center": [x, y, z], "measure", "diameter_bound"}]}
void write_partition_json(std::ostream& os, const ScalePartition& partition, double a, double b);

/// x,y,z,weight
void write_cubature_csv(std::ostream& os, const CubatureRule& rule);

/// j,k,center_x,center_y,center_z,measure,coefficient
void write_coefficients_csv(std::ostream& os, const SampledFrame& frame,
                            const FrameCoefficients& coefficients);

/// l,q,coeff
void write_field_csv(std::ostream& os, const HarmonicField& field);

}  // namespace mexneedlet
