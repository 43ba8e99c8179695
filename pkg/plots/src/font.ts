/** 5x7 bitmap glyphs for axis labels, legends, and titles. */

const GLYPHS: Record<string, string[]> = {
  '0': ['.XXX.', 'X...X', 'X..XX', 'X.X.X', 'XX..X', 'X...X', '.XXX.'],
  '1': ['..X..', '.XX..', '..X..', '..X..', '..X..', '..X..', '.XXX.'],
  '2': ['.XXX.', 'X...X', '....X', '...X.', '..X..', '.X...', 'XXXXX'],
  '3': ['.XXX.', 'X...X', '....X', '..XX.', '....X', 'X...X', '.XXX.'],
  '4': ['...X.', '..XX.', '.X.X.', 'X..X.', 'XXXXX', '...X.', '...X.'],
  '5': ['XXXXX', 'X....', 'XXXX.', '....X', '....X', 'X...X', '.XXX.'],
  '6': ['.XXX.', 'X....', 'X....', 'XXXX.', 'X...X', 'X...X', '.XXX.'],
  '7': ['XXXXX', '....X', '...X.', '..X..', '..X..', '..X..', '..X..'],
  '8': ['.XXX.', 'X...X', 'X...X', '.XXX.', 'X...X', 'X...X', '.XXX.'],
  '9': ['.XXX.', 'X...X', 'X...X', '.XXXX', '....X', '....X', '.XXX.'],
  '.': ['.....', '.....', '.....', '.....', '.....', '.XX..', '.XX..'],
  ',': ['.....', '.....', '.....', '.....', '..X..', '..X..', '.X...'],
  '-': ['.....', '.....', '.....', 'XXXXX', '.....', '.....', '.....'],
  '=': ['.....', '.....', 'XXXXX', '.....', 'XXXXX', '.....', '.....'],
  '(': ['...X.', '..X..', '.X...', '.X...', '.X...', '..X..', '...X.'],
  ')': ['.X...', '..X..', '...X.', '...X.', '...X.', '..X..', '.X...'],
  '/': ['....X', '....X', '...X.', '..X..', '.X...', 'X....', 'X....'],
  '_': ['.....', '.....', '.....', '.....', '.....', '.....', 'XXXXX'],
  ' ': ['.....', '.....', '.....', '.....', '.....', '.....', '.....'],
  'λ': ['XX...', '..X..', '..X..', '..X..', '.X.X.', '.X.X.', 'X...X'],
  a: ['.....', '.....', '.XXX.', '....X', '.XXXX', 'X...X', '.XXXX'],
  b: ['X....', 'X....', 'XXXX.', 'X...X', 'X...X', 'X...X', 'XXXX.'],
  c: ['.....', '.....', '.XXXX', 'X....', 'X....', 'X....', '.XXXX'],
  d: ['....X', '....X', '.XXXX', 'X...X', 'X...X', 'X...X', '.XXXX'],
  e: ['.....', '.....', '.XXX.', 'X...X', 'XXXXX', 'X....', '.XXXX'],
  g: ['.....', '.XXXX', 'X...X', 'X...X', '.XXXX', '....X', '.XXX.'],
  i: ['..X..', '.....', '.XX..', '..X..', '..X..', '..X..', '.XXX.'],
  l: ['.XX..', '..X..', '..X..', '..X..', '..X..', '..X..', '.XXX.'],
  m: ['.....', '.....', 'XX.X.', 'X.X.X', 'X.X.X', 'X.X.X', 'X.X.X'],
  n: ['.....', '.....', 'XXXX.', 'X...X', 'X...X', 'X...X', 'X...X'],
  o: ['.....', '.....', '.XXX.', 'X...X', 'X...X', 'X...X', '.XXX.'],
  p: ['.....', 'XXXX.', 'X...X', 'X...X', 'XXXX.', 'X....', 'X....'],
  q: ['.....', '.XXXX', 'X...X', 'X...X', '.XXXX', '....X', '....X'],
  r: ['.....', '.....', 'X.XX.', 'XX..X', 'X....', 'X....', 'X....'],
  s: ['.....', '.....', '.XXXX', 'X....', '.XXX.', '....X', 'XXXX.'],
  t: ['..X..', '..X..', 'XXXXX', '..X..', '..X..', '..X..', '...XX'],
  u: ['.....', '.....', 'X...X', 'X...X', 'X...X', 'X...X', '.XXXX'],
  v: ['.....', '.....', 'X...X', 'X...X', 'X...X', '.X.X.', '..X..'],
  w: ['.....', '.....', 'X...X', 'X...X', 'X.X.X', 'X.X.X', '.X.X.'],
  x: ['.....', '.....', 'X...X', '.X.X.', '..X..', '.X.X.', 'X...X'],
};

export const GLYPH_WIDTH = 5;
export const GLYPH_HEIGHT = 7;

/** Pixel-on test for a character's glyph cell; unknown characters render
 * as blanks rather than failing. */
export function glyphPixel(char: string, gx: number, gy: number): boolean {
  const glyph = GLYPHS[char];
  if (!glyph) return false;
  return glyph[gy]?.[gx] === 'X';
}

export function textWidth(text: string, scale = 1): number {
  return text.length * (GLYPH_WIDTH + 1) * scale;
}
