/** Decode the plain (P2) PGM the server ships as base64. */

export interface DecodedImage {
  width: number;
  height: number;
  /** row-major, 0..255 */
  pixels: Uint8Array;
}

export function decodeBase64Pgm(b64: string): DecodedImage {
  const text = atob(b64); // global in browsers and in node >= 16
  const tokens: string[] = [];
  for (const line of text.split(/\r?\n/)) {
    const content = line.split("#", 1)[0].trim();
    if (content) tokens.push(...content.split(/\s+/));
  }
  if (tokens[0] !== "P2") {
    throw new Error(`expected P2 PGM, got ${tokens[0] ?? "empty"}`);
  }
  const width = Number(tokens[1]);
  const height = Number(tokens[2]);
  const maxval = Number(tokens[3]);
  if (!Number.isInteger(width) || !Number.isInteger(height) || width < 1 || height < 1) {
    throw new Error("bad PGM dimensions");
  }
  const data = tokens.slice(4);
  if (data.length !== width * height) {
    throw new Error(`expected ${width * height} pixels, got ${data.length}`);
  }
  const pixels = new Uint8Array(width * height);
  for (let i = 0; i < data.length; i++) {
    const v = Number(data[i]);
    if (!Number.isInteger(v) || v < 0 || v > maxval) throw new Error(`bad pixel ${data[i]}`);
    pixels[i] = Math.round((v * 255) / maxval);
  }
  return { width, height, pixels };
}
