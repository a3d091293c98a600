#pragma once

#include <string>

#include "lap/image.hpp"

namespace lap {

// Decodes any PNG into 8-bit RGB (palette expanded, alpha stripped, 16-bit
// narrowed). Throws IoError on unreadable files.
ImageRgb read_png_rgb(const std::string& path);

// Decodes into 8-bit grayscale using the file's gray channel when present,
// otherwise ITU-R 601 luma of the decoded RGB.
ImageGray read_png_gray(const std::string& path);

void write_png_rgb(const std::string& path, const ImageRgb& img);
void write_png_gray(const std::string& path, const ImageGray& img);

}  // namespace lap
