#pragma once

#include <string>

#include "rliac/core/image.hpp"

namespace rliac {

/// PGM / PPM export. Depth maps go out as 16-bit P5 in millimeters
/// (most-significant byte first, per the PNM spec); masks and saliency
/// heatmaps as 8-bit P5; appearance as P6.
void write_pgm8(const std::string& path, const ImageU8& img);
void write_pgm16(const std::string& path, const ImageU16& img);
void write_ppm(const std::string& path, const Image3F& img);

ImageU8 read_pgm8(const std::string& path);
ImageU16 read_pgm16(const std::string& path);

/// Depth (meters, 0 = unavailable) to 16-bit millimeters, saturating.
ImageU16 depth_to_millimeters(const ImageF& depth);

/// [0,1] map to 8-bit with linear 0-255 scaling.
ImageU8 to_gray8(const ImageF& map);

}  // namespace rliac
