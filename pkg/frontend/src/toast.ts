/** Transient error banner; repeated errors replace the previous one. */
export function showToast(container: HTMLElement, message: string, ms = 4000): void {
  container.textContent = message;
  container.classList.add("visible");
  const doc = container.ownerDocument;
  const win = doc.defaultView;
  win?.setTimeout(() => container.classList.remove("visible"), ms);
}
